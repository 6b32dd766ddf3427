"""Immutable simple-graph type plus the structural predicates the rest of
the package needs (connectivity, bipartiteness, complement).

Vertices are always the integers 0..n-1. The adjacency matrix is a
read-only numpy int8 array and is the single source of truth; edge lists,
degrees and neighbor bitmasks are derived views.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adjacency", "_masks")

    def __init__(self, adjacency):
        a = np.array(adjacency, dtype=np.int8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {a.shape}")
        if a.shape[0] < 1:
            raise ValueError("graph needs at least one vertex")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any((a != 0) & (a != 1)):
            raise ValueError("adjacency entries must be 0 or 1")
        if np.any(np.diag(a) != 0):
            raise ValueError("adjacency diagonal must be zero (no loops)")
        a.setflags(write=False)
        self.adjacency = a
        self.n = int(a.shape[0])
        self._masks = None

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        a = np.zeros((n, n), dtype=np.int8)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge ({u},{v}) not allowed")
            a[u, v] = a[v, u] = 1
        return cls(a)

    @property
    def m(self) -> int:
        """Edge count."""
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return list(zip(us.tolist(), vs.tolist()))

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks, cached."""
        if self._masks is None:
            rows = []
            for i in range(self.n):
                row = 0
                for j in np.nonzero(self.adjacency[i])[0]:
                    row |= 1 << int(j)
                rows.append(row)
            self._masks = tuple(rows)
        return self._masks

    def complement(self) -> "Graph":
        a = 1 - self.adjacency
        np.fill_diagonal(a, 0)
        return Graph(a)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class BipartiteCheck(NamedTuple):
    bipartite: bool
    coloring: list[int] | None  # 0/1 side per vertex when bipartite
    odd_walk: list[int] | None  # closed walk of odd length when not


def is_connected(g: Graph) -> bool:
    return len(_component_of(g, 0)) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if not seen[s]:
            comp = _component_of(g, s)
            for v in comp:
                seen[v] = True
            comps.append(comp)
    return comps


def _component_of(g: Graph, start: int) -> list[int]:
    masks = g.neighbor_masks()
    seen = 1 << start
    queue = [start]
    out = [start]
    while queue:
        u = queue.pop()
        new = masks[u] & ~seen
        while new:
            low = new & -new
            v = low.bit_length() - 1
            seen |= low
            new ^= low
            queue.append(v)
            out.append(v)
    return sorted(out)


def is_bipartite(g: Graph) -> BipartiteCheck:
    """BFS 2-coloring. On failure the witness is a closed walk of odd
    length, returned as a vertex sequence whose first and last entries agree.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    masks = g.neighbor_masks()
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                mu = masks[u]
                while mu:
                    low = mu & -mu
                    v = low.bit_length() - 1
                    mu ^= low
                    if color[v] == -1:
                        color[v] = 1 - color[u]
                        parent[v] = u
                        nxt.append(v)
                    elif color[v] == color[u]:
                        return BipartiteCheck(False, None, _odd_walk(parent, u, v))
            frontier = nxt
    return BipartiteCheck(True, color, None)


def _odd_walk(parent, u, v):
    # Walk u -> root -> v -> u through the BFS tree; u and v have equal
    # BFS-depth parity, so the closed walk has odd edge count.
    up = [u]
    while parent[up[-1]] != -1:
        up.append(parent[up[-1]])
    down = [v]
    while parent[down[-1]] != -1:
        down.append(parent[down[-1]])
    return up + down[::-1][1:] + [u]
