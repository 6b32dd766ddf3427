"""Automorphism groups, pair-orbit schemes, and Reynolds averaging.

Groups are represented by generator permutations plus a deterministic
Schreier-Sims base/strong-generating-set chain, giving exact order,
membership tests, and full element enumeration (budgeted). The
pair-orbit scheme of an edge-transitive graph packages the identity
plus the 0/1 indicator matrices of the automorphism orbits on vertex
pairs; the orbit of the edges is always one of the classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .canon import automorphism_generators
from .errors import BudgetExceededError, NotEdgeTransitiveError, SizeLimitError
from .graphs import Graph

MAX_AUT_N = 20
ELEMENT_BUDGET = 10_000_000
_SPOT_CHECK_ELEMENTS = 100


def compose(a, b):
    """Permutation product applying b first: (a o b)[x] = a[b[x]]."""
    return tuple(a[b[x]] for x in range(len(a)))


def invert(a):
    inv = [0] * len(a)
    for i, ai in enumerate(a):
        inv[ai] = i
    return tuple(inv)


def _identity(n):
    return tuple(range(n))


class PermGroup:
    """Permutation group on points 0..degree-1."""

    def __init__(self, degree, generators):
        self.degree = degree
        gens = []
        ident = _identity(degree)
        for g in generators:
            g = tuple(g)
            if len(g) != degree or sorted(g) != list(ident):
                raise ValueError(f"not a permutation of degree {degree}: {g}")
            if g != ident and g not in gens:
                gens.append(g)
        self.generators = gens
        self._chain = None

    # -- stabilizer chain ------------------------------------------------

    def _ensure_chain(self):
        if self._chain is None:
            self._chain = _schreier_sims(self.degree, self.generators)
        return self._chain

    @property
    def order(self):
        base, strong, trans = self._ensure_chain()
        out = 1
        for t in trans:
            out *= len(t)
        return out

    def __contains__(self, perm):
        perm = tuple(perm)
        if len(perm) != self.degree:
            return False
        residue, _ = _strip(perm, *self._ensure_chain())
        return residue == _identity(self.degree)

    def elements(self, budget=ELEMENT_BUDGET):
        """Yield every element exactly once (order up to budget)."""
        base, strong, trans = self._ensure_chain()
        if self.order > budget:
            raise BudgetExceededError(
                f"group order {self.order} exceeds element budget {budget}"
            )
        levels = [sorted(t.values()) for t in trans]

        # Unique factorization g = u_0 . u_1 ... u_{k-1} requires the
        # level-0 coset representative outermost, so build top-down.
        def rec(i, acc):
            if i == len(levels):
                yield acc
                return
            for rep in levels[i]:
                yield from rec(i + 1, compose(acc, rep))

        yield from rec(0, _identity(self.degree))

    def random_elements(self, count, seed=0):
        """Random words in the generators, for spot checks."""
        rng = np.random.default_rng(seed)
        ident = _identity(self.degree)
        if not self.generators:
            return [ident] * count
        out = []
        for _ in range(count):
            g = ident
            for _ in range(int(rng.integers(1, 9))):
                g = compose(g, self.generators[int(rng.integers(len(self.generators)))])
            out.append(g)
        return out

    # -- orbits ----------------------------------------------------------

    def vertex_orbits(self):
        n = self.degree
        seen = [False] * n
        orbits = []
        for start in range(n):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            stack = [start]
            while stack:
                a = stack.pop()
                for g in self.generators:
                    b = g[a]
                    if not seen[b]:
                        seen[b] = True
                        orbit.append(b)
                        stack.append(b)
            orbits.append(sorted(orbit))
        return orbits

    def pair_orbits(self):
        """Orbits on unordered pairs of distinct points, each orbit a
        sorted list of (u, v) with u < v, in order of smallest member."""
        n = self.degree
        seen = set()
        orbits = []
        for u in range(n):
            for v in range(u + 1, n):
                if (u, v) in seen:
                    continue
                orbit = {(u, v)}
                stack = [(u, v)]
                while stack:
                    a, b = stack.pop()
                    for g in self.generators:
                        c, d = g[a], g[b]
                        p = (c, d) if c < d else (d, c)
                        if p not in orbit:
                            orbit.add(p)
                            stack.append(p)
                seen |= orbit
                orbits.append(sorted(orbit))
        return orbits

    def ordered_pair_orbit_ids(self):
        """Matrix of orbit ids for the action on ordered pairs,
        diagonal included."""
        n = self.degree
        ids = np.full((n, n), -1, dtype=np.int64)
        next_id = 0
        for u in range(n):
            for v in range(n):
                if ids[u, v] != -1:
                    continue
                ids[u, v] = next_id
                stack = [(u, v)]
                while stack:
                    a, b = stack.pop()
                    for g in self.generators:
                        c, d = g[a], g[b]
                        if ids[c, d] == -1:
                            ids[c, d] = next_id
                            stack.append((c, d))
                next_id += 1
        return ids


def _strip(perm, base, strong, trans):
    """Factor perm through the transversals; returns (residue, depth)."""
    g = perm
    for i, b in enumerate(base):
        img = g[b]
        if img not in trans[i]:
            return g, i
        g = compose(invert(trans[i][img]), g)
    return g, len(base)


def _orbit_transversal(point, gens, n):
    trans = {point: _identity(n)}
    stack = [point]
    while stack:
        a = stack.pop()
        for g in gens:
            b = g[a]
            if b not in trans:
                trans[b] = compose(g, trans[a])
                stack.append(b)
    return trans


def _schreier_sims(n, generators):
    """Deterministic stabilizer chain: returns (base, strong, trans)."""
    base = []
    strong = []
    trans = []

    def add_base_point(g):
        # first point moved by g
        for x in range(n):
            if g[x] != x:
                base.append(x)
                strong.append([])
                trans.append({})
                return
        raise AssertionError("identity passed to add_base_point")

    def update_level(i):
        gens_i = [g for g in all_gens if all(g[b] == b for b in base[:i])]
        strong[i] = gens_i
        trans[i] = _orbit_transversal(base[i], gens_i, n)

    all_gens = [g for g in generators if g != _identity(n)]
    for g in all_gens:
        if all(g[b] == b for b in base):
            add_base_point(g)
    for i in range(len(base)):
        update_level(i)

    # verify Schreier generators strip to identity; extend chain otherwise
    i = len(base) - 1
    while i >= 0:
        ok = True
        level_gens = strong[i]
        transversal = trans[i]
        for rep in list(transversal.values()):
            for g in level_gens:
                schreier = compose(
                    invert(transversal[g[rep[base[i]]]]), compose(g, rep)
                )
                if schreier == _identity(n):
                    continue
                residue, depth = _strip(schreier, base, strong, trans)
                if residue != _identity(n):
                    all_gens.append(residue)
                    if all(residue[b] == b for b in base):
                        add_base_point(residue)
                    for j in range(len(base)):
                        update_level(j)
                    ok = False
                    break
            if not ok:
                break
        if ok:
            i -= 1
        else:
            i = min(depth, len(base) - 1)
    return base, strong, trans


# -- graph symmetry -----------------------------------------------------


def automorphism_group(g):
    """Full automorphism group of a graph (vertex count capped)."""
    if g.n > MAX_AUT_N:
        raise SizeLimitError(
            f"automorphism search supports up to {MAX_AUT_N} vertices"
        )
    gens = automorphism_generators(g.neighbor_masks())
    group = PermGroup(g.n, gens)
    adjacency = g.adjacency
    for perm in group.random_elements(_SPOT_CHECK_ELEMENTS, seed=g.n):
        for u in range(g.n):
            pu = perm[u]
            for v in range(g.n):
                if adjacency[u][v] != adjacency[pu][perm[v]]:
                    raise AssertionError(
                        "automorphism search returned a non-automorphism"
                    )
    return group


def is_vertex_transitive(g):
    return len(automorphism_group(g).vertex_orbits()) == 1


def _edge_orbits(g, group):
    edges = set(g.edges())
    return [o for o in group.pair_orbits() if o[0] in edges]


def is_edge_transitive(g):
    if g.m == 0:
        raise ValueError("edge transitivity undefined: graph has no edges")
    return len(_edge_orbits(g, automorphism_group(g))) == 1


@dataclass(frozen=True)
class PairOrbitScheme:
    """Identity plus pair-orbit indicator matrices of a graph.

    matrices[0] is the identity; the remaining 0/1 matrices are the
    orbits of the automorphism group on unordered vertex pairs, ordered
    by (orbit size, lexicographically smallest pair). Their sum is the
    all-ones matrix. matrices[edge_class_index] is the adjacency matrix.
    """

    base: Graph = field(repr=False)
    matrices: tuple = field(repr=False)
    edge_class_index: int
    class_sizes: tuple
    class_reps: tuple


def pair_orbit_scheme(g):
    if g.m == 0:
        raise ValueError("pair-orbit scheme undefined: graph has no edges")
    group = automorphism_group(g)
    edge_orbits = _edge_orbits(g, group)
    if len(edge_orbits) > 1:
        witness = (edge_orbits[0][0], edge_orbits[1][0])
        raise NotEdgeTransitiveError(
            "graph is not edge-transitive", witness=witness
        )

    orbits = group.pair_orbits()
    orbits.sort(key=lambda o: (len(o), o[0]))
    n = g.n
    matrices = [np.eye(n, dtype=np.int64)]
    sizes = [n]
    reps = [(0, 0)]
    edge_class_index = None
    edges = set(g.edges())
    for orbit in orbits:
        m = np.zeros((n, n), dtype=np.int64)
        for u, v in orbit:
            m[u, v] = 1
            m[v, u] = 1
        if orbit[0] in edges:
            edge_class_index = len(matrices)
        matrices.append(m)
        sizes.append(len(orbit))
        reps.append(orbit[0])

    total = np.zeros((n, n), dtype=np.int64)
    for m in matrices:
        total += m
    if not np.array_equal(total, np.ones((n, n), dtype=np.int64)):
        raise AssertionError("pair-orbit classes do not partition all pairs")
    adjacency = np.asarray(g.adjacency, dtype=np.int64)
    if not np.array_equal(matrices[edge_class_index], adjacency):
        raise AssertionError("edge class does not match the adjacency matrix")
    for perm in group.generators:
        p = list(perm)
        for m in matrices:
            if not np.array_equal(m, m[np.ix_(p, p)]):
                raise AssertionError("class matrix not generator-invariant")
    if len(group.vertex_orbits()) == 1:
        for m in matrices:
            row_sums = m.sum(axis=1)
            if not np.all(row_sums == row_sums[0]):
                raise AssertionError(
                    "vertex-transitive graph produced a non-regular class"
                )

    return PairOrbitScheme(
        base=g,
        matrices=tuple(m.copy() for m in matrices),
        edge_class_index=edge_class_index,
        class_sizes=tuple(sizes),
        class_reps=tuple(reps),
    )


def scheme_to_dict(scheme):
    classes = []
    for i, m in enumerate(scheme.matrices):
        classes.append({
            "index": i,
            "size": scheme.class_sizes[i],
            "representative_pair": list(scheme.class_reps[i]),
            "row_sums": [int(x) for x in m.sum(axis=1)],
            "rows": ["".join(str(int(x)) for x in row) for row in m],
        })
    return {
        "n": scheme.base.n,
        "edge_class_index": scheme.edge_class_index,
        "class_count": len(scheme.matrices),
        "classes": classes,
    }


def reynolds_average(z, group):
    """Group average of a symmetric matrix, computed orbit-wise: each
    entry is replaced by the mean over its ordered-pair orbit. This
    equals the elementwise average over all group elements."""
    arr = np.asarray(z, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"matrix must be square, got shape {arr.shape}")
    if arr.shape[0] != group.degree:
        raise ValueError(
            f"matrix dimension {arr.shape[0]} does not match group degree "
            f"{group.degree}"
        )
    ids = group.ordered_pair_orbit_ids()
    flat_ids = ids.ravel()
    sums = np.bincount(flat_ids, weights=arr.ravel())
    counts = np.bincount(flat_ids)
    return (sums / counts)[ids]
