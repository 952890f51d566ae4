"""Enumeration of curve classes ``D`` that could obstruct jets of ``K_X + L``.

Candidates are nonnegative integer combinations of the declared curves inside
a coefficient box. The numeric inequalities are screened in the box-scan
kernel; cone membership and the remaining checks run here on the survivors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, lcm

from .. import kernels
from ..lattice import (
    DivisorClass,
    LatticeError,
    NotPseudoeffective,
    SurfaceModel,
    distinct_curve_indices,
    intersect,
    is_nef,
    is_numerically_trivial,
    is_pseudoeffective,
    self_intersection,
)

MODES = ("cor32", "thm31", "thm31prime", "thm33", "thm34")
DEFAULT_COEFF_CAP = 20


class NotNef(LatticeError):
    pass


class EmptyModel(LatticeError):
    pass


@dataclass(frozen=True)
class Check:
    left: Fraction | str
    relation: str  # "<=", "<" or "is"
    right: Fraction | str
    holds: bool


@dataclass(frozen=True)
class ObstructionCandidate:
    D: DivisorClass
    coefficients: tuple[int, ...]  # multiples of the distinct declared curves
    checks: dict[str, Check]


@dataclass
class Enumeration:
    candidates: list[ObstructionCandidate]
    bounds: tuple[int, ...]
    curves: tuple[str, ...]
    scanned: int
    complete: bool
    warnings: list[str] = field(default_factory=list)


def _compare(left: Fraction, relation: str, right: Fraction) -> Check:
    holds = left <= right if relation == "<=" else left < right
    return Check(left, relation, right, holds)


def _flag(value: bool) -> Check:
    return Check("yes" if value else "no", "is", "yes", value)


def mode_checks(
    m: SurfaceModel,
    L: DivisorClass,
    D: DivisorClass,
    threshold: Fraction,
    lk: int,
    mode: str,
    zeta_degree: Fraction | None = None,
    genus_filter: bool = False,
) -> dict[str, Check]:
    """Every inequality the mode attaches to ``D``, evaluated exactly."""
    ld = intersect(m, L, D)
    d2 = self_intersection(m, D)
    lsq = self_intersection(m, L)
    out: dict[str, Check] = {}
    if mode == "cor32":
        out["LD - l_k <= D^2"] = _compare(ld - lk, "<=", d2)
        out["D^2 < LD/2"] = _compare(d2, "<", ld / 2)
        out["LD/2 < l_k"] = _compare(ld / 2, "<", Fraction(lk))
    elif mode == "thm34":
        out["LD - l_k <= D^2"] = _compare(ld - lk, "<=", d2)
    else:
        out["LD - threshold/4 <= D^2"] = _compare(ld - threshold / 4, "<=", d2)
    if lsq > 0:
        out["D^2 <= (LD)^2/L^2"] = _compare(d2, "<=", ld * ld / lsq)
    rest = L - D.scale(2)
    pseff = bool(is_pseudoeffective(m, rest))
    out["L - 2D pseudoeffective"] = _flag(pseff)
    out["L - 2D numerically nontrivial"] = _flag(not is_numerically_trivial(m, rest))
    out["D != 0"] = _flag(not D.is_zero())
    if zeta_degree is not None:
        if genus_filter:
            from .certify import NonCartierOnNonGorenstein, adjunction_genus

            try:
                pa = adjunction_genus(m, D)
                rhs = 2 * pa - 2 - intersect(m, m.canonical, D)
                out["LD - deg zeta <= 2p_a(D) - 2 - K_X D"] = _compare(ld - zeta_degree, "<=", rhs)
            except NonCartierOnNonGorenstein:
                pass  # genus unknown: keep the candidate
        else:
            out["LD - deg zeta <= D^2"] = _compare(ld - zeta_degree, "<=", d2)
    return out


def _scaled_constraint(c0, c1, c2, c3, strict, s):
    """Constraint in real LD, D2 rewritten for the integer-scaled LD' = s LD, D2' = s D2."""
    cs = [Fraction(c0) * s * s, Fraction(c1) * s, Fraction(c2) * s, Fraction(c3)]
    den = lcm(*(c.denominator for c in cs))
    return tuple(int(c * den) for c in cs) + (strict,)


def enumerate_obstructions(
    m: SurfaceModel,
    L: DivisorClass,
    threshold: Fraction | int,
    lk: int,
    mode: str,
    coeff_cap: int = DEFAULT_COEFF_CAP,
    zeta_degree: Fraction | None = None,
    genus_filter: bool = False,
    backend: str | None = None,
) -> Enumeration:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {', '.join(MODES)}")
    if not m.curves:
        raise EmptyModel("model declares no curves")
    if L.is_zero():
        raise ValueError("L is zero")
    threshold = Fraction(threshold)
    nef = is_nef(m, L)
    if mode == "cor32" and not nef:
        raise NotNef(f"{L} is not nef against the declared curves")
    if mode != "cor32" and not is_pseudoeffective(m, L):
        raise NotPseudoeffective(f"{L} is not pseudoeffective")

    idx = distinct_curve_indices(m)
    curves = [m.curves[i].cls for i in idx]
    labels = tuple(m.curves[i].label or f"curve{i}" for i in idx)
    lc = [intersect(m, L, c) for c in curves]
    gram = [[intersect(m, a, b) for b in curves] for a in curves]
    lsq = self_intersection(m, L)
    notes: list[str] = []

    bounds = []
    complete = True
    for i, v in enumerate(lc):
        if v > 0 and mode == "cor32":
            bounds.append(floor(Fraction(2 * lk) / v))  # LD < 2 l_k
        elif v > 0 and nef:
            bounds.append(floor(lsq / (2 * v)))  # L.(L - 2D) >= 0
        else:
            bounds.append(coeff_cap)
            complete = False
            notes.append(f"coefficient of {labels[i]} capped at {coeff_cap}: search is not provably complete")

    # each (c0, c1, c2, c3, strict) means c0 + c1 LD + c2 D^2 + c3 LD^2 >= 0 (> 0 if strict)
    constraints = []
    if mode == "cor32":
        constraints += [(lk, -1, 1, 0, False), (0, Fraction(1, 2), -1, 0, True), (lk, Fraction(-1, 2), 0, 0, True)]
    elif mode == "thm34":
        constraints.append((lk, -1, 1, 0, False))
    else:
        constraints.append((threshold / 4, -1, 1, 0, False))
    if lsq > 0:
        constraints.append((0, 0, -1, 1 / lsq, False))
    if nef and mode != "cor32":
        constraints.append((lsq / 2, -1, 0, 0, False))

    s = lcm(*(x.denominator for x in lc), *(x.denominator for row in gram for x in row))
    int_gram = [[int(x * s) for x in row] for row in gram]
    int_lc = [int(x * s) for x in lc]
    scaled = [_scaled_constraint(*c, s) for c in constraints]
    hits = kernels.scan_box(int_gram, int_lc, bounds, scaled, backend=backend)

    seen: dict[tuple[Fraction, ...], ObstructionCandidate] = {}
    rejected: set[tuple[Fraction, ...]] = set()
    for coeffs, _, _ in hits:
        d = m.divisor([0] * m.rank)
        for a, c in zip(coeffs, curves):
            if a:
                d = d + c.scale(a)
        d = m.divisor(d.coords)
        if d.coords in seen or d.coords in rejected:
            continue
        checks = mode_checks(m, L, d, threshold, lk, mode, zeta_degree, genus_filter)
        if all(c.holds for c in checks.values()):
            seen[d.coords] = ObstructionCandidate(d, tuple(coeffs), checks)
        else:
            rejected.add(d.coords)
    found = [seen[key] for key in sorted(seen)]
    total = 1
    for b in bounds:
        total *= b + 1
    return Enumeration(found, tuple(bounds), labels, total - 1, complete, notes)
