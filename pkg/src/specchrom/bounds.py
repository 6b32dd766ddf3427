"""Chromatic lower bounds from adjacency spectra and cliques.

All spectral bounds require at least one edge; edgeless graphs raise
BoundUndefinedError. The squared-energy bound and the Hoffman bound
hold for the fractional chromatic number, the inertia bound only for
the integer chromatic number, and the clique number bounds both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BoundUndefinedError, SizeLimitError
from .graphs import Graph
from .spectra import eigendecompose, inertia, squared_energies

MAX_CLIQUE_N = 64


def _adjacency_spectrum(g):
    if g.m == 0:
        raise BoundUndefinedError(
            "bound undefined: graph has no edges (s+ = s- = 0)"
        )
    return eigendecompose(np.asarray(g.adjacency, dtype=np.float64))


def ando_lin_bound(g):
    """1 + max(s+/s-, s-/s+), a fractional chromatic lower bound."""
    s_plus, s_minus = squared_energies(_adjacency_spectrum(g))
    return 1.0 + max(s_plus / s_minus, s_minus / s_plus)


def hoffman_bound(g):
    """1 + lambda_max / |lambda_min|, a fractional chromatic lower bound."""
    w = _adjacency_spectrum(g).eigenvalues
    return 1.0 + float(w[0]) / abs(float(w[-1]))


def inertia_bound(g):
    """1 + max(n+/n-, n-/n+) over eigenvalue sign counts (chromatic
    number only; not valid fractionally)."""
    n_plus, n_minus, _ = inertia(_adjacency_spectrum(g))
    return 1.0 + max(n_plus / n_minus, n_minus / n_plus)


def clique_number(g):
    """Largest clique size, by branch and bound with greedy coloring."""
    if g.n > MAX_CLIQUE_N:
        raise SizeLimitError(
            f"clique search supports up to {MAX_CLIQUE_N} vertices"
        )
    masks = g.neighbor_masks()
    best = [1 if g.n else 0]

    def color_order(cand):
        order = []
        color_bounds = []
        color = 0
        rest = cand
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append(v)
                color_bounds.append(color)
                avail &= ~masks[v]
                avail ^= low
                rest ^= low
        return order, color_bounds

    def expand(size, cand):
        order, color_bounds = color_order(cand)
        for i in range(len(order) - 1, -1, -1):
            if size + color_bounds[i] <= best[0]:
                return
            v = order[i]
            nxt = cand & masks[v]
            if nxt:
                expand(size + 1, nxt)
            elif size + 1 > best[0]:
                best[0] = size + 1
            cand ^= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1)
    return best[0]


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one graph, with exact rational renderings where
    the spectrum is integral."""

    graph_id: str
    n: int
    m: int
    s_plus: float
    s_minus: float
    ando_lin: float
    hoffman: float
    inertia: float
    clique: int
    lambda_max: float
    lambda_min: float
    n_plus: int
    n_minus: int
    ando_lin_exact: Fraction | None
    hoffman_exact: Fraction | None
    inertia_exact: Fraction


def full_report(g, graph_id="graph"):
    spectrum = _adjacency_spectrum(g)
    w = spectrum.eigenvalues
    s_plus, s_minus = squared_energies(spectrum)
    n_plus, n_minus, _ = inertia(spectrum)
    lambda_max = float(w[0])
    lambda_min = float(w[-1])

    ando_lin_exact = None
    hoffman_exact = None
    rounded = np.round(w)
    tol = max(spectrum.zero_threshold, 1e-12)
    if np.all(np.abs(w - rounded) <= tol):
        ints = [int(x) for x in rounded]
        sp = sum(x * x for x in ints if x > 0)
        sm = sum(x * x for x in ints if x < 0)
        if sp and sm:
            ando_lin_exact = 1 + max(Fraction(sp, sm), Fraction(sm, sp))
            hoffman_exact = 1 + Fraction(max(ints), -min(ints))
    inertia_exact = 1 + max(
        Fraction(n_plus, n_minus), Fraction(n_minus, n_plus)
    )

    return BoundReport(
        graph_id=graph_id,
        n=g.n,
        m=g.m,
        s_plus=s_plus,
        s_minus=s_minus,
        ando_lin=1.0 + max(s_plus / s_minus, s_minus / s_plus),
        hoffman=1.0 + lambda_max / abs(lambda_min),
        inertia=1.0 + max(n_plus / n_minus, n_minus / n_plus),
        clique=clique_number(g),
        lambda_max=lambda_max,
        lambda_min=lambda_min,
        n_plus=n_plus,
        n_minus=n_minus,
        ando_lin_exact=ando_lin_exact,
        hoffman_exact=hoffman_exact,
        inertia_exact=inertia_exact,
    )


def _fraction_str(x):
    return None if x is None else f"{x.numerator}/{x.denominator}"


def report_to_dict(report):
    return {
        "graph_id": report.graph_id,
        "n": report.n,
        "m": report.m,
        "s_plus": report.s_plus,
        "s_minus": report.s_minus,
        "ando_lin": report.ando_lin,
        "hoffman": report.hoffman,
        "inertia": report.inertia,
        "clique": report.clique,
        "lambda_max": report.lambda_max,
        "lambda_min": report.lambda_min,
        "n_plus": report.n_plus,
        "n_minus": report.n_minus,
        "ando_lin_exact": _fraction_str(report.ando_lin_exact),
        "hoffman_exact": _fraction_str(report.hoffman_exact),
        "inertia_exact": _fraction_str(report.inertia_exact),
    }
