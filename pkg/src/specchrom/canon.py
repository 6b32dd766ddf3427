"""Canonical labeling and automorphism generators for small graphs.

Internal machinery, not part of the public API. The search runs
individualization-refinement over ordered partitions: equitable
refinement splits cells by neighbor counts against every current cell;
at a non-discrete partition the first non-singleton cell is branched on,
individualizing each member in turn. A branch is skipped when an already
discovered automorphism that fixes the current individualization base
pointwise maps it onto an explored sibling, so every pruned subtree is
certified redundant by an explicit group element. The minimum relabeled
adjacency encoding over the explored leaves is the canonical form, and
the permutations extracted from equal-certificate leaf pairs generate
the full automorphism group.

Graphs are passed in as tuples of neighbor bitmasks.
"""

from __future__ import annotations

from .errors import BudgetExceededError

DEFAULT_NODE_BUDGET = 500_000


def refine(masks, cells):
    """Equitable refinement of an ordered partition (cells: tuples)."""
    while True:
        cell_masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cell_masks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                mv = masks[v]
                sig = tuple((mv & cm).bit_count() for cm in cell_masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(tuple(groups[sig]))
        if not changed:
            return new_cells
        cells = new_cells


def canonical_search(masks, node_budget=DEFAULT_NODE_BUDGET):
    """Return (canonical_form, automorphism_generators).

    The canonical form is the relabeled neighbor-mask tuple itself, so it
    can be used both as a dictionary key and as a graph.
    """
    n = len(masks)
    state = {"best_cert": None, "best_order": None, "nodes": 0}
    gens = []

    def leaf(cells):
        order = [c[0] for c in cells]
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        cert = []
        for v in order:
            row = 0
            mv = masks[v]
            while mv:
                low = mv & -mv
                row |= 1 << pos[low.bit_length() - 1]
                mv ^= low
            cert.append(row)
        cert = tuple(cert)
        best = state["best_cert"]
        if best is None or cert < best:
            state["best_cert"] = cert
            state["best_order"] = order
        elif cert == best:
            # equal certificates: order o best_order^{-1} is an automorphism
            phi = [0] * n
            best_order = state["best_order"]
            for i in range(n):
                phi[best_order[i]] = order[i]
            gens.append(tuple(phi))

    def branch(cells, base):
        state["nodes"] += 1
        if state["nodes"] > node_budget:
            raise BudgetExceededError(
                f"canonical search exceeded {node_budget} nodes"
            )
        cells = refine(masks, cells)
        target_index = None
        for idx, c in enumerate(cells):
            if len(c) > 1:
                target_index = idx
                break
        if target_index is None:
            leaf(cells)
            return
        target = cells[target_index]
        head = cells[:target_index]
        tail = cells[target_index + 1:]
        tried = []
        for v in target:
            if tried and _in_explored_orbit(v, tried, gens, base, n):
                continue
            rest = tuple(w for w in target if w != v)
            branch(head + [(v,), rest] + tail, base + (v,))
            tried.append(v)

    branch([tuple(range(n))], ())
    return state["best_cert"], gens


def _in_explored_orbit(v, tried, gens, base, n):
    # Only automorphisms fixing the whole individualization base pointwise
    # may justify a prune at this node.
    fixed = [g for g in gens if all(g[b] == b for b in base)]
    if not fixed:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in fixed:
        for a in range(n):
            ra, rb = find(a), find(g[a])
            if ra != rb:
                parent[ra] = rb
    rv = find(v)
    return any(find(u) == rv for u in tried)


def canonical_form(masks, node_budget=DEFAULT_NODE_BUDGET):
    return canonical_search(masks, node_budget)[0]


def automorphism_generators(masks, node_budget=DEFAULT_NODE_BUDGET):
    return canonical_search(masks, node_budget)[1]
