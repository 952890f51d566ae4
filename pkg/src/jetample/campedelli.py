"""Points on a bidegree (1,1), (3,3) complete intersection in P^2 x P^2 over Q(w).

The group Z/3 x Z/3 acts by cyclically shifting both coordinate triples and by
scaling ``x_i -> w^i x_i``, ``y_i -> w^-i y_i``. The checks below are the finite
algebra behind a Campedelli surface whose tricanonical system generates 1-jets
without being 1-jet ample.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .scalars import Eisenstein, omega_power, parse_eisenstein

Vec = tuple[Eisenstein, Eisenstein, Eisenstein]


def _vec(values: Sequence[object]) -> Vec:
    if len(values) != 3:
        raise ValueError("each factor needs three homogeneous coordinates")
    v = tuple(Eisenstein.coerce(c) for c in values)
    if all(c.is_zero() for c in v):
        raise ValueError("homogeneous coordinates cannot all vanish")
    return v  # type: ignore[return-value]


def _proportional(u: Vec, v: Vec) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(i + 1, 3))


@dataclass(frozen=True)
class BiPoint:
    x: Vec
    y: Vec

    def __init__(self, x: Sequence[object], y: Sequence[object]):
        object.__setattr__(self, "x", _vec(x))
        object.__setattr__(self, "y", _vec(y))

    def same_point(self, other: BiPoint) -> bool:
        """Equality in P^2 x P^2 (independent scalars per factor)."""
        return _proportional(self.x, other.x) and _proportional(self.y, other.y)

    def __str__(self) -> str:
        return "([" + ",".join(map(str, self.x)) + "],[" + ",".join(map(str, self.y)) + "])"


_BIPOINT = re.compile(r"^\s*\(\s*\[([^\]]*)\]\s*,\s*\[([^\]]*)\]\s*\)\s*$")


def parse_bipoint(text: str) -> BiPoint:
    """``([e,e,e],[e,e,e])`` with Eisenstein expressions in ``w``."""
    match = _BIPOINT.match(text)
    if not match:
        raise ValueError(f"expected ([x0,x1,x2],[y0,y1,y2]), got {text!r}")
    xs = [parse_eisenstein(t) for t in match.group(1).split(",")]
    ys = [parse_eisenstein(t) for t in match.group(2).split(",")]
    return BiPoint(xs, ys)


@dataclass(frozen=True)
class GroupElement:
    s: int  # shifts
    t: int  # scalings

    def __post_init__(self):
        object.__setattr__(self, "s", self.s % 3)
        object.__setattr__(self, "t", self.t % 3)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.s + other.s, self.t + other.t)


GROUP = tuple(GroupElement(s, t) for s in range(3) for t in range(3))


def _shift(v: Vec) -> Vec:
    return (v[1], v[2], v[0])


def _scale(v: Vec, sign: int) -> Vec:
    return tuple(omega_power(sign * i) * c for i, c in enumerate(v))  # type: ignore[return-value]


def act(g: GroupElement, p: BiPoint) -> BiPoint:
    x, y = p.x, p.y
    for _ in range(g.s):
        x, y = _shift(x), _shift(y)
    for _ in range(g.t):
        x, y = _scale(x, 1), _scale(y, -1)
    return BiPoint(x, y)


def bilinear_form(p: BiPoint) -> Eisenstein:
    return sum((a * b for a, b in zip(p.x, p.y)), Eisenstein(0))


def cubic_parts(p: BiPoint) -> tuple[Eisenstein, Eisenstein]:
    """``((sum x^3)(sum y^3), prod x_i y_i)``: the constant and lambda parts of the sextic."""
    sx = sum((c**3 for c in p.x), Eisenstein(0))
    sy = sum((c**3 for c in p.y), Eisenstein(0))
    prod = Eisenstein(1)
    for a, b in zip(p.x, p.y):
        prod = prod * a * b
    return sx * sy, prod


def on_complete_intersection(p: BiPoint, lam: object) -> bool:
    """Both defining equations at a specific ``lambda``."""
    if not bilinear_form(p).is_zero():
        return False
    const, prod = cubic_parts(p)
    return (const - Eisenstein.coerce(lam) * prod).is_zero()


def on_complete_intersection_all_lambda(p: BiPoint) -> dict[str, bool]:
    """The equations with ``lambda`` symbolic: each coefficient must vanish on its own."""
    const, prod = cubic_parts(p)
    return {
        "sum x_i y_i = 0": bilinear_form(p).is_zero(),
        "prod x_i y_i = 0": prod.is_zero(),
        "(sum x^3)(sum y^3) = 0": const.is_zero(),
    }


def star_star_sums(p: BiPoint, a: int, b: int) -> tuple[Eisenstein, Eisenstein]:
    s1 = sum((omega_power(a * i) * p.x[i] * p.y[(i + b) % 3] for i in range(3)), Eisenstein(0))
    s2 = sum((omega_power(-a * i) * p.x[i] * p.y[(i - b) % 3] for i in range(3)), Eisenstein(0))
    return s1, s2


def star_star_holds(p: BiPoint, a: int, b: int) -> bool:
    s1, s2 = star_star_sums(p, a, b)
    return s1.is_zero() and s2.is_zero()


def orbit(p: BiPoint) -> list[BiPoint]:
    """Distinct points of the orbit, in group order."""
    out: list[BiPoint] = []
    for g in GROUP:
        q = act(g, p)
        if not any(q.same_point(r) for r in out):
            out.append(q)
    return out


def same_orbit(p: BiPoint, q: BiPoint) -> bool:
    return any(act(g, p).same_point(q) for g in GROUP)


w = Eisenstein.omega()
w2 = w * w

SOLUTIONS: tuple[tuple[tuple[int, int], BiPoint, BiPoint], ...] = (
    ((1, 0), BiPoint([0, 0, 1], [1, -1, 0]), BiPoint([1, -1, 0], [0, 0, 1])),
    ((0, 1), BiPoint([0, 1, -1], [1, 1, 1]), BiPoint([1, 1, 1], [0, 1, -1])),
    ((1, 1), BiPoint([0, 1, -w2], [1, w2, 1]), BiPoint([1, w, 1], [0, 1, -w])),
    ((1, 2), BiPoint([1, w2, 1], [0, 1, -w2]), BiPoint([0, 1, -w], [1, w, 1])),
)


def verify_example_46() -> dict:
    cases = []
    point_ok = 0
    disjoint_ok = 0
    for item, ((a, b), p, q) in enumerate(SOLUTIONS, start=1):
        pts = []
        for r in (p, q):
            ci = on_complete_intersection_all_lambda(r)
            ss = star_star_holds(r, a, b)
            ok = all(ci.values()) and ss
            point_ok += ok
            pts.append({"point": str(r), "equations": ci, "star_star": ss, "ok": ok})
        distinct = not same_orbit(p, q)
        disjoint_ok += distinct
        cases.append({
            "item": item,
            "a": a,
            "b": b,
            "points": pts,
            "different_orbits": distinct,
            "ok": all(x["ok"] for x in pts) and distinct,
        })
    green = point_ok == 8 and disjoint_ok == 4
    return {
        "cases": cases,
        "points_ok": point_ok,
        "orbits_disjoint": disjoint_ok,
        "ok": green,
        "conclusion": (
            "O_X(3K_X) is 1-jet generated but not 1-jet ample"
            if green
            else "verification failed: conclusion not established"
        ),
    }
