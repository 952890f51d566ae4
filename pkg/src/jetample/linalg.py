"""Exact linear algebra over Q on plain nested lists of ``Fraction``."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from . import kernels

Matrix = list[list[Fraction]]


class SingularMatrixError(ArithmeticError):
    pass


def to_fraction_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(v) for v in row] for row in rows]


def is_symmetric(m: Sequence[Sequence[Fraction]]) -> bool:
    n = len(m)
    return all(len(row) == n for row in m) and all(m[i][j] == m[j][i] for i in range(n) for j in range(i))


def bilinear(m: Sequence[Sequence[Fraction]], a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for i, ai in enumerate(a):
        if ai:
            row = m[i]
            total += ai * sum((row[j] * bj for j, bj in enumerate(b) if bj), Fraction(0))
    return total


def mat_vec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((r * x for r, x in zip(row, v)), Fraction(0)) for row in m]


def solve(m: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve a square nonsingular system exactly (Gauss-Jordan)."""
    n = len(m)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        prow = [v / pv for v in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], prow)]
    return [aug[i][n] for i in range(n)]


def determinant(m: Sequence[Sequence[Fraction]]) -> Fraction:
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / pv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q; rows are scaled to integers and handed to the rank kernel."""
    int_rows = []
    for row in rows:
        den = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        int_rows.append([int(Fraction(v) * den) for v in row])
    return kernels.integer_rank(int_rows)


def signature(m: Sequence[Sequence[Fraction]]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` counts of a symmetric form via congruence diagonalization."""
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if piv is not None:
                _swap_sym(a, k, piv)
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    continue  # row k is zero on the remaining block
                # e_k <- e_k + e_j makes the diagonal 2*a[k][j] != 0
                _add_sym(a, k, j, Fraction(1))
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                _add_sym(a, i, k, -a[i][k] / d)
    return pos, neg, n - pos - neg


def _swap_sym(a: Matrix, i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def _add_sym(a: Matrix, target: int, source: int, c: Fraction) -> None:
    """Congruence ``e_target <- e_target + c * e_source`` (row and column)."""
    n = len(a)
    for j in range(n):
        a[target][j] += c * a[source][j]
    for i in range(n):
        a[i][target] += c * a[i][source]


def is_negative_definite(m: Sequence[Sequence[Fraction]]) -> bool:
    pos, neg, zero = signature(m)
    return neg == len(m)
