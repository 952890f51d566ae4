"""Divisor classes on a surface given by its intersection lattice and a finite curve list.

Every positivity answer here is relative to the declared curve list, which the
user asserts generates the effective cone. Nothing is inferred from geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .cone import cone_membership
from .scalars import format_rational

CURVE_LIST_CAVEAT = (
    "relative to the declared curve list (assumed to generate the effective cone)"
)

DEFAULT_NEGATIVITY_BOUND = 1000


class LatticeError(ValueError):
    pass


class NotPseudoeffective(LatticeError):
    pass


class IndefiniteSupport(LatticeError):
    """Zariski support lost negative definiteness: the curve list contradicts Hodge index."""


@dataclass(frozen=True)
class DivisorClass:
    coords: tuple[Fraction, ...]
    cartier: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(a + b for a, b in zip(self.coords, other.coords)), self.cartier and other.cartier)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(tuple(a - b for a, b in zip(self.coords, other.coords)), self.cartier and other.cartier)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coords), self.cartier)

    def scale(self, c: Fraction | int) -> DivisorClass:
        c = Fraction(c)
        return DivisorClass(tuple(c * a for a in self.coords), self.cartier and c.denominator == 1)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Curve:
    cls: DivisorClass
    label: str = ""
    shared: bool = False  # may share components with other listed curves


@dataclass(frozen=True)
class SurfaceModel:
    """Intersection lattice, canonical class, curve generators and marked points."""

    gram: tuple[tuple[Fraction, ...], ...]
    canonical: DivisorClass
    curves: tuple[Curve, ...]
    basis_labels: tuple[str, ...] = ()
    points: tuple = ()  # PointDatum instances (see jetample.singularity)
    cartier_basis: tuple[tuple[Fraction, ...], ...] | None = None
    flags: frozenset[str] = frozenset()
    name: str = ""
    negativity_bound: int = DEFAULT_NEGATIVITY_BOUND
    source_text: str = field(default="", compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def divisor(self, coords: Sequence[object]) -> DivisorClass:
        """Build a class and set its Cartier flag from the model's Cartier lattice."""
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != self.rank:
            raise LatticeError(f"class has {len(coords)} coordinates, model rank is {self.rank}")
        return DivisorClass(coords, self.is_cartier_coords(coords))

    def is_cartier_coords(self, coords: Sequence[Fraction]) -> bool:
        if self.cartier_basis is None:
            return all(Fraction(c).denominator == 1 for c in coords)
        # coords = sum c_i * basis_i with integer c_i
        transposed = [[self.cartier_basis[i][j] for i in range(self.rank)] for j in range(self.rank)]
        sol = linalg.solve(transposed, list(coords))
        return all(c.denominator == 1 for c in sol)

    def curve_index(self, label: str) -> int:
        for i, c in enumerate(self.curves):
            if c.label == label:
                return i
        raise KeyError(label)

    def point(self, label: str):
        for p in self.points:
            if p.label == label:
                return p
        raise KeyError(f"no point labelled {label!r}")

    def has_flag(self, flag: str) -> bool:
        return flag in self.flags


def intersect(m: SurfaceModel, a: DivisorClass, b: DivisorClass) -> Fraction:
    if len(a) != m.rank or len(b) != m.rank:
        raise LatticeError(f"dimension mismatch: {len(a)}, {len(b)} vs rank {m.rank}")
    return linalg.bilinear(m.gram, a.coords, b.coords)


def self_intersection(m: SurfaceModel, a: DivisorClass) -> Fraction:
    return intersect(m, a, a)


def is_nef(m: SurfaceModel, d: DivisorClass) -> bool:
    if any(intersect(m, d, c.cls) < 0 for c in m.curves):
        return False
    return self_intersection(m, d) >= 0


@dataclass(frozen=True)
class PseffResult:
    pseudoeffective: bool
    witness: tuple[Fraction, ...] | str | None

    def __bool__(self) -> bool:
        return self.pseudoeffective


def is_pseudoeffective(m: SurfaceModel, d: DivisorClass, allow_fast_path: bool = False) -> PseffResult:
    """Cone membership over Q; the witness is the nonnegative curve combination.

    With ``allow_fast_path`` the Hodge-index sufficient condition is tried
    first and, when it applies, the witness is the string ``"lemma-1.2"``.
    """
    if allow_fast_path and hodge_pseudoeffective(m, d):
        return PseffResult(True, "lemma-1.2")
    lam = cone_membership([c.cls.coords for c in m.curves], d.coords)
    if lam is None:
        return PseffResult(False, None)
    return PseffResult(True, tuple(lam))


def nef_test_classes(m: SurfaceModel) -> list[DivisorClass]:
    """Nef classes readily available on the model: nef curves and nef basis vectors."""
    found = [c.cls for c in m.curves if is_nef(m, c.cls)]
    for i in range(m.rank):
        e = m.divisor([1 if j == i else 0 for j in range(m.rank)])
        if is_nef(m, e):
            found.append(e)
    return found


def hodge_pseudoeffective(m: SurfaceModel, d: DivisorClass, nef_class: DivisorClass | None = None) -> bool:
    """Sufficient test: ``d**2 >= 0`` and ``d.L > 0`` for some nef ``L``."""
    if self_intersection(m, d) < 0:
        return False
    candidates = [nef_class] if nef_class is not None else nef_test_classes(m)
    return any(intersect(m, d, ell) > 0 for ell in candidates)


@dataclass(frozen=True)
class ZariskiPair:
    positive: DivisorClass
    negative: tuple[tuple[int, Fraction], ...]  # (curve index, coefficient)

    def negative_class(self, m: SurfaceModel) -> DivisorClass:
        total = m.divisor([0] * m.rank)
        for idx, c in self.negative:
            total = total + m.curves[idx].cls.scale(c)
        return total


def distinct_curve_indices(m: SurfaceModel) -> list[int]:
    seen: dict[tuple[Fraction, ...], int] = {}
    for i, c in enumerate(m.curves):
        seen.setdefault(c.cls.coords, i)
    return sorted(seen.values())


def zariski_decompose(m: SurfaceModel, d: DivisorClass) -> ZariskiPair:
    """Zariski decomposition ``d = P + N`` by support enlargement.

    Start from the curves ``d`` meets negatively, solve ``(d - N).C = 0`` on
    the support, enlarge the support by curves the remainder meets
    negatively, and stop when the remainder is nef against the list.
    """
    if not is_pseudoeffective(m, d):
        raise NotPseudoeffective(f"{d} is not in the cone of the declared curves")
    candidates = distinct_curve_indices(m)
    support: list[int] = []
    coeffs: list[Fraction] = []
    positive = d
    while True:
        new = [i for i in candidates if i not in support and intersect(m, positive, m.curves[i].cls) < 0]
        if not new:
            break
        support = sorted(support + new)
        sub = [[intersect(m, m.curves[i].cls, m.curves[j].cls) for j in support] for i in support]
        if not linalg.is_negative_definite(sub):
            raise IndefiniteSupport(
                "support " + ", ".join(m.curves[i].label or str(i) for i in support) + " is not negative definite"
            )
        rhs = [intersect(m, d, m.curves[i].cls) for i in support]
        coeffs = linalg.solve(sub, rhs)
        if any(c < 0 for c in coeffs):
            raise IndefiniteSupport("negative Zariski coefficient: curve list inconsistent with the input class")
        positive = d
        for i, c in zip(support, coeffs):
            positive = positive - m.curves[i].cls.scale(c)
    if self_intersection(m, positive) < 0:
        raise IndefiniteSupport("positive part has negative square: curve list does not generate the effective cone")
    positive = m.divisor(positive.coords)
    negative = tuple((i, c) for i, c in zip(support, coeffs) if c != 0)
    return ZariskiPair(positive, negative)


def is_big(m: SurfaceModel, d: DivisorClass) -> bool:
    pair = zariski_decompose(m, d)
    return self_intersection(m, pair.positive) > 0


def is_numerically_trivial(m: SurfaceModel, d: DivisorClass) -> bool:
    """Zero pairing with every basis vector and every listed curve."""
    for i in range(m.rank):
        if linalg.bilinear(m.gram, d.coords, [1 if j == i else 0 for j in range(m.rank)]) != 0:
            return False
    return all(intersect(m, d, c.cls) == 0 for c in m.curves)


@dataclass
class ModelReport:
    valid: bool
    signature: tuple[int, int, int]
    diagnostics: list[str]


def validate_model(m: SurfaceModel) -> ModelReport:
    diags: list[str] = []
    n = m.rank
    if n == 0:
        return ModelReport(False, (0, 0, 0), ["rank must be positive"])
    if not linalg.is_symmetric(m.gram):
        diags.append("intersection matrix is not symmetric")
        return ModelReport(False, (0, 0, 0), diags)
    sig = linalg.signature(m.gram)
    if sig != (1, n - 1, 0):
        diags.append(f"signature {sig[:2]} (null {sig[2]}) violates Hodge index: expected (1, {n - 1})")
    if len(m.canonical) != n:
        diags.append("canonical class has the wrong length")
    if not m.curves:
        diags.append("curve list is empty")
    for i, c in enumerate(m.curves):
        if len(c.cls) != n:
            diags.append(f"curve {c.label or i} has the wrong length")
            continue
        sq = intersect(m, c.cls, c.cls)
        if sq < -m.negativity_bound:
            diags.append(f"curve {c.label or i} has square {sq} below -{m.negativity_bound}")
    for i, a in enumerate(m.curves):
        for j in range(i + 1, len(m.curves)):
            b = m.curves[j]
            if a.shared or b.shared or a.cls.coords == b.cls.coords:
                continue
            if len(a.cls) == n and len(b.cls) == n and intersect(m, a.cls, b.cls) < 0:
                diags.append(f"distinct curves {a.label or i} and {b.label or j} meet negatively")
    if m.cartier_basis is not None:
        if len(m.cartier_basis) != n or linalg.determinant(m.cartier_basis) == 0:
            diags.append("Cartier basis must consist of rank-many independent classes")
    for p in m.points:
        diags.extend(p.diagnostics())
    return ModelReport(not diags, sig, diags)
