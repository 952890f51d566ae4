"""Pure-Python reference kernels; the compiled ``_kernels`` module mirrors this API."""

from __future__ import annotations

from math import gcd
from typing import Sequence

Constraint = tuple[int, int, int, int, bool]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix, by fraction-free elimination.

    Rows are reduced by their content after every update so entries stay small.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        piv = -1
        best = 0
        for i in range(rank, len(work)):
            v = work[i][col]
            if v and (piv < 0 or abs(v) < best):
                piv, best = i, abs(v)
                if best == 1:
                    break
        if piv < 0:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        p = work[rank]
        pv = p[col]
        for i in range(rank + 1, len(work)):
            r = work[i]
            a = r[col]
            if not a:
                continue
            g = gcd(pv, a)
            m1, m2 = pv // g, a // g
            content = 0
            for j in range(col, ncols):
                v = r[j] * m1 - p[j] * m2
                r[j] = v
                if v:
                    content = gcd(content, v)
            if content > 1:
                for j in range(col, ncols):
                    r[j] //= content
        rank += 1
        if rank == len(work):
            break
    return rank


def _satisfied(ld: int, d2: int, constraints: Sequence[Constraint]) -> bool:
    for c0, c1, c2, c3, strict in constraints:
        v = c0 + c1 * ld + c2 * d2 + c3 * ld * ld
        if v < 0 or (strict and v == 0):
            return False
    return True


def scan_box(
    gram: Sequence[Sequence[int]],
    lc: Sequence[int],
    bounds: Sequence[int],
    constraints: Sequence[Constraint],
) -> list[tuple[tuple[int, ...], int, int]]:
    """Scan the nonzero integer vectors ``0 <= a <= bounds`` in lexicographic order.

    For each vector computes ``ld = a.lc`` and ``d2 = a^T gram a`` and keeps it
    when every constraint ``c0 + c1*ld + c2*d2 + c3*ld**2`` is ``>= 0``
    (``> 0`` when strict). Returns ``(a, ld, d2)`` triples.
    """
    n = len(bounds)
    if n == 0:
        return []
    a = [0] * n
    ga = [0] * n  # gram @ a
    ld = 0
    d2 = 0
    out = []
    while True:
        # odometer increment on the last coordinate
        i = n - 1
        while i >= 0 and a[i] == bounds[i]:
            b = a[i]
            if b:
                d2 += -2 * b * ga[i] + b * b * gram[i][i]
                ld -= b * lc[i]
                for j in range(n):
                    ga[j] -= b * gram[j][i]
                a[i] = 0
            i -= 1
        if i < 0:
            return out
        d2 += 2 * ga[i] + gram[i][i]
        ld += lc[i]
        for j in range(n):
            ga[j] += gram[j][i]
        a[i] += 1
        if _satisfied(ld, d2, constraints):
            out.append((tuple(a), ld, d2))
