"""Jet certificates for adjoint divisors ``K_X + L``.

The flow compares ``L^2`` with the threshold of the chosen criterion, resolves
the equality case through a Seshadri constant on a supplied blow-up model, and
otherwise enumerates obstruction curves. No enumeration result means the
criterion leaves no room for a curve that would block the jets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..cluster import l_n
from ..lattice import (
    CURVE_LIST_CAVEAT,
    DivisorClass,
    LatticeError,
    NotPseudoeffective,
    SurfaceModel,
    intersect,
    is_nef,
    is_pseudoeffective,
    self_intersection,
)
from ..singularity import PointDatum, delta_k, delta_point, trivial_degree_bound
from .blowup import BlowupModel, SeshadriValue, seshadri
from .obstructions import DEFAULT_COEFF_CAP, Enumeration, ObstructionCandidate, enumerate_obstructions

CERTIFIED = "Certified"
BOUNDARY = "BoundarySeshadri"
OBSTRUCTIONS = "Obstructions"
INCONCLUSIVE = "Inconclusive"


class NonCartierAdjoint(LatticeError):
    pass


class MissingBlowupModel(LatticeError):
    pass


class NonCartierOnNonGorenstein(LatticeError):
    pass


class HypothesisError(LatticeError):
    pass


@dataclass(frozen=True)
class Hypothesis:
    name: str
    left: object
    relation: str
    right: object
    holds: bool


@dataclass
class Certificate:
    verdict: str
    mode: str
    k: int
    points: list[tuple[str, int]]
    threshold: Fraction
    lsq: Fraction
    statement: str
    reason: str = ""
    seshadri: SeshadriValue | None = None
    obstructions: list[ObstructionCandidate] = field(default_factory=list)
    enumeration: Enumeration | None = None
    hypotheses: list[Hypothesis] = field(default_factory=list)
    caveat: str = CURVE_LIST_CAVEAT
    warnings: list[str] = field(default_factory=list)


def adjunction_genus(m: SurfaceModel, D: DivisorClass) -> Fraction:
    """``1 + (D^2 + K_X.D)/2``."""
    if not D.cartier and not m.has_flag("gorenstein") and not m.has_flag("smooth"):
        raise NonCartierOnNonGorenstein(f"{D} is not Cartier and the model is not flagged Gorenstein")
    return 1 + (self_intersection(m, D) + intersect(m, m.canonical, D)) / 2


def _auto_mode(m: SurfaceModel, L: DivisorClass, points: Sequence[PointDatum]) -> str:
    if len(points) > 1:
        return "thm33"
    if not points[0].smooth:
        return "thm31prime"
    return "cor32" if is_nef(m, L) else "thm31"


def certify_jets(
    m: SurfaceModel,
    L: DivisorClass,
    point: PointDatum | Sequence[tuple[PointDatum, int]],
    k: int,
    bm: BlowupModel | None = None,
    mode: str | None = None,
    threshold_kind: str = "reider",
    coeff_cap: int = DEFAULT_COEFF_CAP,
    zeta_filter: bool = False,
    genus_filter: bool = False,
    backend: str | None = None,
) -> Certificate:
    """Certify ``k``-jets of ``K_X + L`` at a point (or a weighted point set for thm33)."""
    if isinstance(point, PointDatum):
        weighted = [(point, k)]
    else:
        weighted = [(p, int(w)) for p, w in point]
    if k < 0 or any(w < 0 for _, w in weighted):
        raise ValueError("jet orders must be nonnegative")
    pts = [p for p, _ in weighted]
    if L.is_zero():
        raise ValueError("L is zero")
    adjoint = m.canonical + L
    if not m.is_cartier_coords(adjoint.coords):
        raise NonCartierAdjoint(f"K_X + L = {adjoint} is not Cartier")
    hyps = [Hypothesis("K_X + L Cartier", str(adjoint), "is", "Cartier", True)]
    nef = is_nef(m, L)
    pseff = is_pseudoeffective(m, L)
    hyps.append(Hypothesis("L nef", "yes" if nef else "no", "is", "yes", nef))
    hyps.append(Hypothesis("L pseudoeffective", "yes" if pseff else "no", "is", "yes", bool(pseff)))
    if not pseff:
        raise NotPseudoeffective(f"L = {L} is not pseudoeffective")

    mode = mode or _auto_mode(m, L, pts)
    if mode != "thm33" and len(pts) != 1:
        raise HypothesisError(f"mode {mode} takes a single point")
    if mode in ("cor32", "thm31") and not pts[0].smooth:
        raise HypothesisError(f"mode {mode} needs a smooth point; use thm31prime")
    if mode == "thm31prime" and pts[0].smooth:
        raise HypothesisError("mode thm31prime needs a rational singular point")
    if mode == "cor32" and not nef:
        raise HypothesisError("mode cor32 needs L nef")
    if mode == "thm34" and not m.has_flag("smooth"):
        raise HypothesisError("mode thm34 needs a model flagged smooth")
    if threshold_kind not in ("reider", "bogomolov"):
        raise ValueError("threshold must be reider or bogomolov")
    if threshold_kind == "bogomolov" and (mode not in ("thm31", "cor32") or not m.has_flag("smooth")):
        raise HypothesisError("the bogomolov threshold applies to a smooth surface at a single point")

    lk = l_n(k)
    if mode == "thm31prime":
        threshold = delta_k(pts[0].graph, k)
        tname = "delta_k"
    elif mode == "thm33":
        if any(w < 1 for _, w in weighted):
            raise ValueError("thm33 weights must be positive")
        threshold = sum((delta_point(p, w) for p, w in weighted), Fraction(0))
        tname = "sum delta(x_i, k_i)"
    elif threshold_kind == "bogomolov":
        threshold = Fraction(4 * lk)
        tname = "4 l_k"
    else:
        threshold = Fraction((k + 2) ** 2)
        tname = "(k+2)^2"
    lsq = self_intersection(m, L)
    labels = [(p.label, w) for p, w in weighted]
    statement = _statement(mode, k, labels)
    cert = Certificate(INCONCLUSIVE, mode, k, labels, threshold, lsq, statement)
    cert.hypotheses = hyps
    if mode in ("cor32", "thm34", "thm31", "thm31prime"):
        cert.hypotheses.append(
            Hypothesis("level k covers all lower levels", tname, "is", "nondecreasing in k", True)
        )

    zeta = None
    if zeta_filter or genus_filter:
        zeta = _zeta_degree_bound(mode, weighted, k)
        cert.hypotheses.append(Hypothesis("deg zeta (weakest instantiation)", zeta, "<=", zeta, True))

    if lsq < threshold:
        cert.hypotheses.append(Hypothesis(f"L^2 >= {tname}", lsq, ">=", threshold, False))
        cert.reason = f"hypothesis fails: L^2 = {lsq} < {threshold}"
        return cert
    strict = lsq > threshold
    cert.hypotheses.append(Hypothesis(f"L^2 > {tname}", lsq, ">", threshold, strict))

    boundary = False
    if not strict:
        if mode == "thm33":
            cert.reason = "boundary case L^2 = sum delta(x_i, k_i) is not automated"
            return cert
        if threshold_kind == "bogomolov":
            cert.reason = "the bogomolov variant needs L^2 > 4 l_k"
            return cert
        if bm is None:
            raise MissingBlowupModel("L^2 equals the threshold: a blow-up model is needed for the Seshadri constant")
        eps = seshadri(bm, L)
        cert.seshadri = eps
        target = k + 1 if mode == "thm31prime" else k + 2
        hit = eps.value == target
        cert.hypotheses.append(Hypothesis("eps(x, L) == boundary value", eps.value, "==", target, hit))
        if mode == "thm34":
            cert.hypotheses.append(Hypothesis("k even", k, "is", "even", k % 2 == 0))
            hit = hit and k % 2 == 0
        boundary = hit

    enum = enumerate_obstructions(m, L, threshold, lk, mode, coeff_cap, zeta, genus_filter, backend=backend)
    cert.enumeration = enum
    cert.obstructions = enum.candidates
    cert.warnings.extend(enum.warnings)
    if boundary:
        cert.verdict = BOUNDARY
        cert.reason = "L^2 equals the threshold and eps(x, L) attains the boundary value"
        if enum.candidates:
            cert.reason += "; obstruction candidates are listed as well"
    elif enum.candidates:
        cert.verdict = OBSTRUCTIONS
        cert.reason = f"{len(enum.candidates)} obstruction candidate(s) pass every filter"
    else:
        cert.verdict = CERTIFIED
        cert.reason = "no curve class passes the obstruction filters"
        if not enum.complete:
            cert.verdict = INCONCLUSIVE
            cert.reason = "no candidate found, but the coefficient box was capped"
    return cert


def _zeta_degree_bound(mode: str, weighted, k: int) -> Fraction:
    if mode == "thm33":
        return sum((trivial_degree_bound(p.graph, w - 1) for p, w in weighted), Fraction(0))
    p = weighted[0][0]
    if p.smooth:
        return Fraction(l_n(k))
    return trivial_degree_bound(p.graph, k)


def _statement(mode: str, k: int, labels: list[tuple[str, int]]) -> str:
    where = labels[0][0]
    if mode == "thm34":
        return f"K_X+L is {k}-jet ample"
    if mode == "thm33":
        parts = ", ".join(f"m_{lab}^{w}" for lab, w in labels)
        return f"H^0(K_X+L) surjects onto K_X+L modulo {parts}"
    return f"K_X+L generates {k}-jets at {where}"


def prop44_search(m: SurfaceModel, A: DivisorClass) -> dict:
    """Declared curves ``D`` with ``A.D = 1`` and ``p_a(D) = 1`` on a minimal Kodaira-dimension-0 model."""
    if not (m.has_flag("kodaira0") and m.has_flag("minimal")):
        raise HypothesisError("model must be flagged kodaira0 and minimal")
    asq = self_intersection(m, A)
    if not is_nef(m, A) or asq <= 0:
        raise HypothesisError("A must be nef with positive square")
    if asq < 4:
        raise HypothesisError(f"A^2 = {asq} < 4")
    found = []
    for i, c in enumerate(m.curves):
        if intersect(m, A, c.cls) != 1:
            continue
        try:
            pa = adjunction_genus(m, c.cls)
        except NonCartierOnNonGorenstein:
            continue
        if pa == 1:
            found.append({"label": c.label or f"curve{i}", "class": c.cls})
    return {
        "A^2": asq,
        "curves": found,
        "inference": (
            "eps(x, A) <= A.D / mult_x D, so a double point x on such a D gives eps(x, A) = 1/2"
            if found
            else "no curve of A-degree 1 with p_a = 1 among the declared curves"
        ),
        "caveat": CURVE_LIST_CAVEAT,
    }
