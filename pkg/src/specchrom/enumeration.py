"""Exhaustive generation of non-isomorphic graphs on up to 7 vertices.

Representatives on k+1 vertices are built by attaching a new vertex to
every representative on k vertices in all 2^k ways and deduplicating by
canonical form. This is complete: deleting the highest-numbered vertex
of any (k+1)-vertex graph leaves a k-vertex graph isomorphic to some
representative, and isomorphic attachments collapse to one canonical
key. Representatives are themselves stored in canonical form, so the
output order is deterministic.
"""

from __future__ import annotations

from .canon import canonical_form
from .errors import SizeLimitError
from .graphs import Graph, is_connected

MAX_ENUMERATION_N = 7

_reps_cache = {1: [(0,)]}


def _attach(masks, attach_mask, k):
    rows = list(masks)
    for i in range(k):
        if attach_mask >> i & 1:
            rows[i] |= 1 << k
    rows.append(attach_mask)
    return tuple(rows)


def _representatives(n):
    """Canonical neighbor-mask tuples for all graphs on n vertices.

    No size cap: used internally by tests to build larger corpora. The
    public entry point is enumerate_nonisomorphic.
    """
    if n < 1:
        raise ValueError("vertex count must be at least 1")
    top = max(_reps_cache)
    while top < n:
        seen = set()
        for masks in _reps_cache[top]:
            for attach_mask in range(1 << top):
                seen.add(canonical_form(_attach(masks, attach_mask, top)))
        top += 1
        _reps_cache[top] = sorted(seen)
    return _reps_cache[n]


def _graph_from_masks(masks):
    n = len(masks)
    adjacency = [[masks[u] >> v & 1 for v in range(n)] for u in range(n)]
    return Graph(adjacency)


def enumerate_nonisomorphic(n, connected_only=False):
    """Yield one representative per isomorphism class on n vertices."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise SizeLimitError(
            f"enumeration supports 1..{MAX_ENUMERATION_N} vertices, got {n}"
        )
    for masks in _representatives(n):
        g = _graph_from_masks(masks)
        if connected_only and not is_connected(g):
            continue
        yield g
