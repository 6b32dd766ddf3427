"""graph6 codec.

Wire layout: a size prefix, then the upper triangle of the adjacency
matrix packed column by column -- x(0,1), x(0,2), x(1,2), x(0,3), ... --
six bits per printable byte. Every data byte stores its six bits offset
by 63, most significant bit first, and the final byte is zero-padded.
The size prefix is one byte n+63 for n <= 62, or byte 126 followed by a
big-endian 18-bit value in three bytes for larger n.
"""

from __future__ import annotations

import numpy as np

from .errors import Graph6Error
from .graphs import Graph

HEADER = ">>graph6<<"

# Parse-side sanity cap. The wire format allows n up to 2^36, but this
# package works with dense matrices; anything huge is a malformed or
# mis-addressed input, not a workload.
MAX_PARSE_N = 4096


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise Graph6Error("non-ASCII byte in graph6 input", offset=exc.start) from None
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    text = text.rstrip("\r\n")
    if not text:
        raise Graph6Error("empty graph6 string", offset=0)

    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character in graph6 input", offset=exc.start) from None
    n, idx = _parse_size(data)
    if n < 1:
        raise Graph6Error("graph6 size must be at least 1", offset=0)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(data) - idx
    if have < need:
        raise Graph6Error(
            f"truncated graph6 data: need {need} bytes for n={n}, found {have}",
            offset=len(data),
        )
    if have > need:
        raise Graph6Error("trailing data after graph6 payload", offset=idx + need)

    vals = []
    for k in range(need):
        b = data[idx + k]
        if not 63 <= b <= 126:
            raise Graph6Error(f"data byte {b} out of range 63..126", offset=idx + k)
        vals.append(b - 63)

    adj = np.zeros((n, n), dtype=np.int8)
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if vals[bit // 6] >> (5 - bit % 6) & 1:
                adj[i, j] = adj[j, i] = 1
            bit += 1
    # padding bits of the last byte must be zero
    while bit < 6 * need:
        if vals[bit // 6] >> (5 - bit % 6) & 1:
            raise Graph6Error("nonzero padding bit", offset=idx + bit // 6)
        bit += 1
    return Graph(adj)


def _parse_size(data: bytes) -> tuple[int, int]:
    b0 = data[0]
    if 63 <= b0 <= 125:
        return b0 - 63, 1
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("graph6 long-long size form not supported", offset=1)
        if len(data) < 4:
            raise Graph6Error("truncated long-form size prefix", offset=len(data))
        n = 0
        for k in (1, 2, 3):
            b = data[k]
            if not 63 <= b <= 126:
                raise Graph6Error(f"size byte {b} out of range 63..126", offset=k)
            n = n << 6 | (b - 63)
        if n > MAX_PARSE_N:
            raise Graph6Error(f"size {n} exceeds supported range {MAX_PARSE_N}", offset=1)
        return n, 4
    raise Graph6Error(f"size byte {b0} out of range 63..126", offset=0)


def write_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    else:
        raise ValueError(f"n={n} beyond the supported graph6 size range")

    acc = 0
    nbits = 0
    adj = g.adjacency
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | int(adj[i, j])
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out).decode("ascii")


def iter_graph6(lines):
    """Parse an iterable of graph6 lines, yielding (line_number, Graph).

    Blank lines are skipped. Parse failures re-raise with the 1-based line
    number attached.
    """
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped:
            continue
        try:
            yield lineno, parse_graph6(stripped)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}") from None
