"""Exact rational primal simplex for small dense LPs.

Solves max c.y subject to A y <= b, y >= 0 with b >= 0, so the slack
basis is feasible and no phase-1 is needed. Bland's rule on both the
entering and leaving choices guarantees termination. Everything runs
over Fraction, so the optimum and both solutions are exact.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def simplex_max(c, rows, rhs):
    """Returns (value, y, duals).

    y is the primal optimum (length len(c)); duals are the optimal dual
    values, read off as the reduced costs of the slack columns.
    """
    m = len(rows)
    n = len(c)
    if len(rhs) != m:
        raise ValueError("rhs length does not match row count")
    for b in rhs:
        if b < 0:
            raise ValueError("rhs must be nonnegative for the slack basis")

    # tableau: n structural columns, m slack columns, rhs column
    width = n + m + 1
    tab = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        line = [Fraction(x) for x in row]
        line.extend(ONE if j == i else ZERO for j in range(m))
        line.append(Fraction(rhs[i]))
        tab.append(line)
    # objective row holds z - c: optimal when all entries nonnegative
    obj = [-Fraction(x) for x in c] + [ZERO] * m + [ZERO]
    basis = [n + i for i in range(m)]

    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ValueError("LP is unbounded")
        _pivot(tab, obj, basis, leave, enter)

    y = [ZERO] * n
    for i, var in enumerate(basis):
        if var < n:
            y[var] = tab[i][-1]
    duals = [obj[n + i] for i in range(m)]
    return obj[-1], y, duals


def _pivot(tab, obj, basis, leave, enter):
    pivot_row = tab[leave]
    coef = pivot_row[enter]
    tab[leave] = [x / coef for x in pivot_row]
    pivot_row = tab[leave]
    for i, row in enumerate(tab):
        if i == leave:
            continue
        factor = row[enter]
        if factor:
            tab[i] = [x - factor * p for x, p in zip(row, pivot_row)]
    factor = obj[enter]
    if factor:
        obj[:] = [x - factor * p for x, p in zip(obj, pivot_row)]
    basis[leave] = enter
