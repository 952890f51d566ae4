"""Closed-form sufficient conditions built from Seshadri constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..scalars import RootValue, compare_sqrt_sum

COR42_ASSUMPTIONS = (
    "A is nef",
    "eps(x_i, A) >= 1 at every chosen point",
)
COR43_ASSUMPTIONS = (
    "A is ample and globally generated",
    "(X, A) is not (P^2, O(1))",
)


@dataclass(frozen=True)
class Prop41Verdict:
    surjective: bool
    comparison: int  # sign of sum (k_i+1)/eps_i - 1
    reason: str


def prop41_check(values: Sequence[tuple[int, RootValue]], lsq: Fraction | int) -> Prop41Verdict:
    """Sufficient test for surjectivity onto ``prod m_{x_i}^{k_i}`` twisted by ``K_X + L``."""
    if not values:
        raise ValueError("need at least one point")
    radicands = []
    for k, eps in values:
        if k < 1:
            raise ValueError("k_i must be at least 1")
        eps = eps if isinstance(eps, RootValue) else RootValue.rational(eps)
        if eps.signed_square() <= 0:
            raise ValueError("Seshadri constants must be positive")
        # (k+1)/eps = sqrt((k+1)^2 / eps^2)
        radicands.append(Fraction((k + 1) ** 2) / eps.square())
    cmp = compare_sqrt_sum(radicands, 1)
    if cmp < 0:
        return Prop41Verdict(True, cmp, "sum of (k_i+1)/eps_i is below 1")
    if cmp > 0:
        return Prop41Verdict(False, cmp, "sum of (k_i+1)/eps_i exceeds 1: criterion does not apply")
    lsq = Fraction(lsq)
    needed = sum((k + 1) ** 2 for k, _ in values)
    if len(values) == 1 and lsq == (values[0][0] + 1) ** 2:
        return Prop41Verdict(False, cmp, "sum equals 1 with r = 1 and L^2 = (k+1)^2: excluded case")
    if lsq >= needed:
        return Prop41Verdict(True, cmp, f"sum equals 1 and L^2 = {lsq} >= {needed}")
    return Prop41Verdict(False, cmp, f"sum equals 1 but L^2 = {lsq} < {needed}")


def threshold_cor42(k: int, r: int, asq: Fraction | int) -> int:
    """Smallest ``n`` with ``K_X + nA`` surjective onto jets of total order ``k`` at ``r`` points."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    return k + 1 + r if Fraction(asq) > 1 else k + 2 + r


def threshold_cor43(k: int) -> tuple[int, int]:
    """``(n for k-jet spanned, n for k-jet ample)`` for ``K_X + nA``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return k + 2, 2 * (k + 1)
