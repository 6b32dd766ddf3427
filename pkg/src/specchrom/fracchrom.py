"""Exact fractional chromatic numbers via the covering LP.

chi_f is the optimum of min sum x_S over maximal independent sets with
sum_{S containing v} x_S >= 1 for every vertex. We solve the packing
dual (max sum y_v subject to y(S) <= 1 per set, y >= 0), whose slack
basis is immediately feasible, and read the covering weights off the
slack reduced costs. Both solutions are re-verified exactly before
anything is returned, so a wrong answer cannot escape silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import SizeLimitError
from .ratlp import simplex_max

MAX_MIS_N = 30
MAX_CHI_F_N = 18


def maximal_independent_sets(g):
    """All maximal independent sets as vertex bitmasks, sorted."""
    if g.n > MAX_MIS_N:
        raise SizeLimitError(
            f"independent set enumeration supports up to {MAX_MIS_N} vertices"
        )
    masks = g.neighbor_masks()
    n = g.n
    full = (1 << n) - 1
    # maximal independent sets of g = maximal cliques of the complement
    comp = [(~masks[v]) & full & ~(1 << v) for v in range(n)]
    out = []

    def expand(r, p, x):
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        best = -1
        pool = pivot_pool
        while pool:
            low = pool & -pool
            u = low.bit_length() - 1
            deg = (p & comp[u]).bit_count()
            if deg > best:
                best = deg
                pivot = u
            pool ^= low
        cand = p & ~comp[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & comp[v], x & comp[v])
            p ^= low
            x |= low
            cand ^= low

    expand(0, full, 0)
    return sorted(out)


@dataclass(frozen=True)
class FractionalSolution:
    """Exact optimum with mutually certifying primal and dual parts.

    weights maps independent-set bitmasks to positive rational weights
    covering every vertex at least once; dual_certificate is a feasible
    packing vector of the same total value, proving optimality.
    """

    value: Fraction
    weights: dict = field(repr=False)
    dual_certificate: tuple = field(repr=False)


def fractional_chromatic(g):
    if g.n > MAX_CHI_F_N:
        raise SizeLimitError(
            f"fractional chromatic supports up to {MAX_CHI_F_N} vertices"
        )
    sets = maximal_independent_sets(g)
    n = g.n
    rows = [[(s >> v) & 1 for v in range(n)] for s in sets]
    value, y, duals = simplex_max([1] * n, rows, [1] * len(sets))

    weights = {
        sets[i]: duals[i] for i in range(len(sets)) if duals[i] != 0
    }

    # exact re-verification of every claimed property
    for s, w in weights.items():
        if w < 0:
            raise AssertionError("negative covering weight")
    for v in range(n):
        cover = sum(w for s, w in weights.items() if (s >> v) & 1)
        if cover < 1:
            raise AssertionError(f"vertex {v} covered only {cover} < 1")
    total = sum(weights.values(), Fraction(0))
    if total != value:
        raise AssertionError("covering weight total differs from optimum")
    dual_total = sum(y, Fraction(0))
    if dual_total != value:
        raise AssertionError("packing total differs from optimum")
    for yv in y:
        if yv < 0:
            raise AssertionError("negative packing value")
    for s in sets:
        load = sum(y[v] for v in range(n) if (s >> v) & 1)
        if load > 1:
            raise AssertionError("packing constraint violated")

    return FractionalSolution(value, weights, tuple(y))


def kneser_ratio(n, k):
    """Exact lambda_max / |lambda_min| for the Kneser graph: the extreme
    eigenvalues are C(n-k, k) and -C(n-k-1, k-1), and their ratio
    collapses to n/k - 1. Both routes are computed and cross-checked."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k >= 2, got n={n}, k={k}")
    from_counts = Fraction(comb(n - k, k), comb(n - k - 1, k - 1))
    closed_form = Fraction(n, k) - 1
    if from_counts != closed_form:
        raise AssertionError(
            f"kneser ratio mismatch: {from_counts} vs {closed_form}"
        )
    return closed_form


def _fraction_str(x):
    return f"{x.numerator}/{x.denominator}"


def solution_to_dict(solution, n):
    weights = [
        {
            "set": format(s, "x"),
            "vertices": [v for v in range(n) if (s >> v) & 1],
            "weight": _fraction_str(w),
        }
        for s, w in sorted(solution.weights.items())
    ]
    return {
        "value": _fraction_str(solution.value),
        "value_float": float(solution.value),
        "weights": weights,
        "dual_certificate": [_fraction_str(y) for y in solution.dual_certificate],
    }
