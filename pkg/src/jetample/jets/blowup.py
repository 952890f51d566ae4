"""Blow-up models and Seshadri constants read off a declared curve list on ``Y``."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..lattice import DivisorClass, LatticeError, SurfaceModel, intersect, is_nef, self_intersection
from ..scalars import RootValue


class InvalidBlowup(LatticeError):
    pass


class NoPositiveCurves(LatticeError):
    """No declared curve on ``Y`` meets the exceptional class positively."""


SELF_INTERSECTION_BOUND = "SelfIntersectionBound"


@dataclass(frozen=True)
class BlowupModel:
    """``f: Y -> X`` as a lattice map plus the exceptional class (E or the fundamental cycle Z)."""

    source: SurfaceModel
    target: SurfaceModel  # the surface Y
    pullback: tuple[tuple[Fraction, ...], ...]  # row i = f^*(basis_i of X) in Y coordinates
    exceptional: DivisorClass
    center: str = ""
    name: str = ""

    def pull(self, d: DivisorClass) -> DivisorClass:
        if len(d) != self.source.rank:
            raise LatticeError(f"class has {len(d)} coordinates, source rank is {self.source.rank}")
        coords = [Fraction(0)] * self.target.rank
        for c, row in zip(d.coords, self.pullback):
            if c:
                for j, v in enumerate(row):
                    coords[j] += c * v
        return DivisorClass(tuple(coords), d.cartier)

    def diagnostics(self) -> list[str]:
        out = []
        x, y = self.source, self.target
        if len(self.pullback) != x.rank or any(len(r) != y.rank for r in self.pullback):
            return [f"pullback must have {x.rank} rows of length {y.rank}"]
        if len(self.exceptional) != y.rank:
            return ["exceptional class has the wrong length"]
        basis = [DivisorClass(tuple(1 if j == i else 0 for j in range(x.rank))) for i in range(x.rank)]
        pulled = [self.pull(b) for b in basis]
        for i in range(x.rank):
            for j in range(i, x.rank):
                if intersect(y, pulled[i], pulled[j]) != intersect(x, basis[i], basis[j]):
                    out.append(f"pullback does not preserve the product of basis vectors {i}, {j}")
            if intersect(y, pulled[i], self.exceptional) != 0:
                out.append(f"pullback of basis vector {i} meets the exceptional class")
        if self_intersection(y, self.exceptional) >= 0:
            out.append("exceptional class must have negative square")
        return out

    def require_valid(self) -> None:
        problems = self.diagnostics()
        if problems:
            raise InvalidBlowup("; ".join(problems))


@dataclass(frozen=True)
class SeshadriValue:
    value: RootValue
    witness: str  # a curve label, or SELF_INTERSECTION_BOUND
    witness_class: DivisorClass | None = None
    ratio: Fraction | None = None  # exact (f^*L . C)/(Z . C) at the witness curve

    @property
    def from_curve(self) -> bool:
        return self.witness != SELF_INTERSECTION_BOUND


def seshadri(bm: BlowupModel, L: DivisorClass) -> SeshadriValue:
    """Largest ``eps`` with ``f^*L - eps * Z`` nef against the declared curves of ``Y``.

    Each curve ``C`` with ``Z.C > 0`` caps ``eps`` at ``(f^*L.C)/(Z.C)``; the square
    condition ``(f^*L - eps Z)^2 >= 0`` caps it at ``sqrt(L^2 / -Z^2)``. Ties go to a curve.
    """
    x, y = bm.source, bm.target
    if not is_nef(x, L):
        warnings.warn("L is not nef on X; the Seshadri sup is evaluated anyway", stacklevel=2)
    fl = bm.pull(L)
    z = bm.exceptional
    best: SeshadriValue | None = None
    for i, c in enumerate(y.curves):
        zc = intersect(y, z, c.cls)
        if zc <= 0:
            continue
        ratio = intersect(y, fl, c.cls) / zc
        if best is None or ratio < best.ratio:
            best = SeshadriValue(RootValue.rational(ratio), c.label or f"curve{i}", c.cls, ratio)
    if best is None:
        raise NoPositiveCurves("no declared curve on Y meets the exceptional class positively")
    lsq = self_intersection(x, L)
    zsq = self_intersection(y, z)
    if lsq >= 0:
        cap = RootValue.sqrt(lsq / -zsq)
        if cap < best.value:
            return SeshadriValue(cap, SELF_INTERSECTION_BOUND)
    return best


def seshadri_bounds(bm: BlowupModel, L: DivisorClass) -> list[tuple[str, RootValue]]:
    """Every individual upper bound on ``eps`` (for witness checks)."""
    y = bm.target
    fl = bm.pull(L)
    out = []
    for i, c in enumerate(y.curves):
        zc = intersect(y, bm.exceptional, c.cls)
        if zc > 0:
            out.append((c.label or f"curve{i}", RootValue.rational(intersect(y, fl, c.cls) / zc)))
    lsq = self_intersection(bm.source, L)
    if lsq >= 0:
        out.append((SELF_INTERSECTION_BOUND, RootValue.sqrt(lsq / -self_intersection(y, bm.exceptional))))
    return out


def pullback_matrix(rows: Sequence[Sequence[object]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(v) for v in r) for r in rows)
