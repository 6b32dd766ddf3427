"""Named graph constructors and the GraphSpec mini-language.

A GraphSpec is one of

    g6:<graph6 string>
    file:<path>                    graph6 first line, or edge-list text
    <name>[:<arg>[:<arg>]]         registered generator, e.g. kneser:5:2

optionally wrapped in ``complement:`` to complement the inner graph.

Edge-list text files hold one "u v" pair per line (0-based vertex ids),
with an optional "n=<count>" first line for isolated trailing vertices.
"""

from __future__ import annotations

import os
from itertools import combinations

import numpy as np

from .errors import Graph6Error, GraphSpecError
from .graph6 import parse_graph6
from .graphs import Graph


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphSpecError("complete:n requires n >= 1")
    a = np.ones((n, n), dtype=np.int8)
    np.fill_diagonal(a, 0)
    return Graph(a)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphSpecError("cycle:n requires n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphSpecError("path:n requires n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def kneser_graph(n: int, k: int) -> Graph:
    """Vertices are the k-subsets of {0..n-1} in lexicographic order,
    adjacent iff disjoint."""
    if not (k >= 1 and n >= 2 * k):
        raise GraphSpecError(f"kneser:{n}:{k} requires n >= 2k >= 2")
    subsets = [frozenset(c) for c in combinations(range(n), k)]
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges)


def petersen_graph() -> Graph:
    return kneser_graph(5, 2)


def wheel_graph(n: int) -> Graph:
    """Cycle C_n plus a universal hub vertex (n+1 vertices, 2n edges)."""
    if n < 3:
        raise GraphSpecError("wheel:n requires n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph.from_edges(n + 1, edges)


def paley_graph(q: int) -> Graph:
    """Paley graph: vertices are field elements, adjacency is a nonzero
    quadratic-residue difference.

    Supported orders: primes q = 1 (mod 4), and q = 9 via the GF(9)
    construction (which is the 3x3 rook's graph, the unique strongly
    regular (9,4,1,2) graph; Paley graphs are self-complementary so the
    rook's graph and its complement give isomorphic results).
    """
    if q == 9:
        return _paley_9()
    if q < 5 or not _is_prime(q) or q % 4 != 1:
        raise GraphSpecError(
            f"paley:{q} requires a prime q = 1 (mod 4), or the special case q = 9"
        )
    residues = {pow(x, 2, q) for x in range(1, q)}
    edges = [(i, j) for i in range(q) for j in range(i + 1, q) if (j - i) % q in residues]
    return Graph.from_edges(q, edges)


def _paley_9() -> Graph:
    # GF(9) = GF(3)[t]/(t^2+1); elements (a,b) ~ a+bt. The nonzero squares
    # are a coset of index 2 in the cyclic group of order 8; the resulting
    # Cayley graph is the 3x3 rook's graph: (a,b) ~ (c,d) iff a=c xor b=d.
    verts = [(a, b) for a in range(3) for b in range(3)]
    idx = {v: i for i, v in enumerate(verts)}
    edges = []
    for a, b in verts:
        for c, d in verts:
            if (a, b) < (c, d) and ((a == c) != (b == d)):
                edges.append((idx[(a, b)], idx[(c, d)]))
    return Graph.from_edges(9, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


GENERATORS = {
    "complete": (complete_graph, 1),
    "cycle": (cycle_graph, 1),
    "path": (path_graph, 1),
    "kneser": (kneser_graph, 2),
    "petersen": (petersen_graph, 0),
    "paley": (paley_graph, 1),
    "wheel": (wheel_graph, 1),
}


def generate(name: str, args: list[int]) -> Graph:
    if name not in GENERATORS:
        known = ", ".join(sorted(GENERATORS))
        raise GraphSpecError(f"unknown generator '{name}' (known: {known})")
    fn, arity = GENERATORS[name]
    if len(args) != arity:
        raise GraphSpecError(f"generator '{name}' takes {arity} argument(s), got {len(args)}")
    return fn(*args)


def resolve_graph_spec(text: str) -> Graph:
    """Build the graph described by a GraphSpec string."""
    if not text:
        raise GraphSpecError("empty graph spec")
    if text.startswith("complement:"):
        inner = text[len("complement:"):]
        return resolve_graph_spec(inner).complement()
    if text.startswith("g6:"):
        try:
            return parse_graph6(text[len("g6:"):])
        except Graph6Error as exc:
            raise GraphSpecError(f"bad g6: spec: {exc}") from None
    if text.startswith("file:"):
        return load_graph_file(text[len("file:"):])
    parts = text.split(":")
    name, raw_args = parts[0], parts[1:]
    try:
        args = [int(a) for a in raw_args]
    except ValueError:
        raise GraphSpecError(f"non-integer argument in spec '{text}'") from None
    return generate(name, args)


def load_graph_file(path: str) -> Graph:
    """Ad-hoc single-graph file input: graph6 on the first line, or an
    edge-list text file as a fallback."""
    if not os.path.exists(path):
        raise GraphSpecError(f"graph file not found: {path}")
    with open(path, encoding="ascii") as fh:
        content = fh.read()
    lines = [ln.strip() for ln in content.splitlines() if ln.strip()]
    if not lines:
        raise GraphSpecError(f"graph file {path} is empty")
    try:
        return parse_graph6(lines[0])
    except Graph6Error:
        pass
    return _parse_edge_list(lines, path)


def _parse_edge_list(lines: list[str], path: str) -> Graph:
    n_declared = None
    edges = []
    for lineno, ln in enumerate(lines, start=1):
        if ln.startswith("n="):
            n_declared = int(ln[2:])
            continue
        parts = ln.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphSpecError(
                f"{path}:{lineno}: expected 'u v' edge pair, got {ln!r}"
            )
        edges.append((int(parts[0]), int(parts[1])))
    top = max((max(u, v) for u, v in edges), default=-1)
    n = n_declared if n_declared is not None else top + 1
    if n < 1:
        raise GraphSpecError(f"{path}: no vertices declared")
    if top >= n:
        raise GraphSpecError(f"{path}: edge endpoint {top} exceeds n={n}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphSpecError(f"{path}: {exc}") from None
