"""Exact rational cone membership by phase-one simplex (Bland's rule, no cycling)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def cone_membership(generators: Sequence[Sequence[Fraction]], target: Sequence[Fraction]) -> list[Fraction] | None:
    """Find ``lam >= 0`` with ``sum(lam[i] * generators[i]) == target``.

    Returns the coefficient vector (a basic feasible solution) or ``None``
    when the target is outside the cone spanned by the generators.
    """
    m = len(target)
    n = len(generators)
    if all(Fraction(t) == 0 for t in target):
        return [Fraction(0)] * n
    if n == 0:
        return None
    # rows: sum_i g_i[r] lam_i + s_r = |t_r| after sign flip, artificials s_r
    tab: list[list[Fraction]] = []
    for r in range(m):
        sign = -1 if Fraction(target[r]) < 0 else 1
        row = [sign * Fraction(generators[i][r]) for i in range(n)]
        row += [Fraction(1) if k == r else Fraction(0) for k in range(m)]
        row.append(sign * Fraction(target[r]))
        tab.append(row)
    basis = [n + r for r in range(m)]
    width = n + m
    # objective: minimize sum of artificials => reduced costs
    cost = [Fraction(0)] * (width + 1)
    for r in range(m):
        for j in range(width + 1):
            cost[j] -= tab[r][j]
    for r in range(m):
        cost[n + r] += 1
    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        best = None
        leave = -1
        for r in range(m):
            a = tab[r][entering]
            if a > 0:
                ratio = tab[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave < 0:
            # unbounded direction in phase one cannot happen (objective >= 0)
            raise ArithmeticError("phase-one simplex unbounded")
        _pivot(tab, cost, leave, entering)
        basis[leave] = entering
    if cost[-1] != 0:
        return None
    lam = [Fraction(0)] * n
    for r, b in enumerate(basis):
        if b < n:
            lam[b] = tab[r][-1]
    return lam


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], row: int, col: int) -> None:
    pv = tab[row][col]
    prow = [v / pv for v in tab[row]]
    tab[row] = prow
    for r in range(len(tab)):
        if r != row:
            f = tab[r][col]
            if f:
                tab[r] = [a - f * b for a, b in zip(tab[r], prow)]
    f = cost[col]
    if f:
        for j in range(len(cost)):
            cost[j] -= f * prow[j]
