"""Colengths of plane complete-intersection germs and the bound l_n.

Two independent routes compute the degree of the cluster ``O/(f, g)`` at the
origin: truncated monomial linear algebra (:func:`colength`) and iterated
point blow-ups summing products of multiplicities (:func:`noether_degree`).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator

from . import kernels
from .scalars import SparsePoly, format_poly, format_rational, parse_poly

GERM_VARS = ("x", "y")
DEFAULT_ORDER_CAP = 64
DEFAULT_DEPTH_CAP = 32


class InfiniteColength(ArithmeticError):
    """``f`` and ``g`` share a factor through the origin."""

    def __init__(self, message: str, certificate: str):
        super().__init__(message)
        self.certificate = certificate


class DepthExceeded(RuntimeError):
    pass


class IrrationalCenter(ArithmeticError):
    """A common tangent direction is not defined over Q; blow-ups would leave the field."""


def germ(text_or_poly: str | SparsePoly) -> SparsePoly:
    """A bivariate polynomial over Q vanishing at the origin."""
    p = parse_poly(text_or_poly, GERM_VARS) if isinstance(text_or_poly, str) else text_or_poly
    if p.nvars != 2:
        raise ValueError("germs are polynomials in x, y")
    if not p.is_rational():
        raise ValueError("germ coefficients must be rational")
    if p.is_zero():
        raise ValueError("the zero polynomial is not a curve germ")
    if p.coeff((0, 0)) != 0:
        raise ValueError(f"{format_germ(p)} does not vanish at the origin")
    return p


def format_germ(p: SparsePoly) -> str:
    return format_poly(p, GERM_VARS)


# ---------------------------------------------------------------------------
# colength by truncated linear algebra


def _monomials_below(n: int) -> list[tuple[int, int]]:
    return [(a, d - a) for d in range(n) for a in range(d, -1, -1)]


def _integer_terms(p: SparsePoly) -> dict[tuple[int, int], int]:
    den = lcm(*(c.denominator for _, c in p.items()))
    return {m: int(c * den) for m, c in p.items()}


def _codim(f_terms: dict, g_terms: dict, n: int) -> int:
    """``dim O/((f, g) + m^n)`` via the span of truncated monomial multiples."""
    monos = _monomials_below(n)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for terms in (f_terms, g_terms):
        order = min(a + b for a, b in terms)
        for a, b in _monomials_below(n - order):
            row = [0] * len(monos)
            for (p, q), c in terms.items():
                col = index.get((p + a, q + b))
                if col is not None:
                    row[col] = c
            rows.append(row)
    return len(monos) - (kernels.integer_rank(rows) if rows else 0)


def codimension_profile(f: SparsePoly, g: SparsePoly, up_to: int) -> list[int]:
    """``[dim O/((f,g) + m^N) for N = 0..up_to]``; nondecreasing, stabilizes at the colength."""
    ft, gt = _integer_terms(germ(f)), _integer_terms(germ(g))
    return [_codim(ft, gt, n) for n in range(up_to + 1)]


def common_factor(f: SparsePoly, g: SparsePoly) -> str | None:
    """A common factor of ``f`` and ``g`` vanishing at the origin, rendered, or ``None``."""
    import sympy

    x, y = sympy.symbols("x y")

    def to_sympy(p: SparsePoly):
        return sum(sympy.Rational(c.numerator, c.denominator) * x**a * y**b for (a, b), c in p.items())

    h = sympy.gcd(to_sympy(f), to_sympy(g))
    if h.free_symbols and sympy.expand(h).subs({x: 0, y: 0}) == 0:
        return str(sympy.factor(h)).replace("**", "^")
    return None


def colength(f: SparsePoly, g: SparsePoly, order_cap: int = DEFAULT_ORDER_CAP) -> int:
    """``dim_Q Q[[x,y]]/(f, g)``.

    Increases the truncation order ``N`` until ``codim_N == codim_{N+1}``, which
    by Nakayama's lemma certifies ``m^N`` inside the ideal. A codimension above
    ``deg f * deg g`` certifies a common factor through the origin.
    """
    f, g = germ(f), germ(g)
    ft, gt = _integer_terms(f), _integer_terms(g)
    bezout = f.degree() * g.degree()
    prev = _codim(ft, gt, 1)
    for n in range(2, order_cap + 2):
        cur = _codim(ft, gt, n)
        if cur == prev:
            return cur
        if cur > bezout:
            factor = common_factor(f, g)
            cert = f"codimension {cur} at order {n} exceeds deg f * deg g = {bezout}"
            if factor is not None:
                cert += f"; common factor {factor}"
            raise InfiniteColength(f"infinite colength: {cert}", cert)
        prev = cur
    raise InfiniteColength(
        f"colength not stabilized below truncation order {order_cap}", "exceeded cap"
    )


def contains_power(f: SparsePoly, g: SparsePoly, n: int) -> bool:
    """Whether ``m^{n+1}`` lies in ``(f, g)``; ``n = -1`` asks about the unit ideal."""
    if n < -1:
        raise ValueError("n must be >= -1")
    if _contains_power_fast(f, g, n):
        return True
    colength(f, g)  # raises InfiniteColength when appropriate
    return False


def _contains_power_fast(f: SparsePoly, g: SparsePoly, n: int) -> bool:
    # m^{n+1} in I  <=>  I + m^{n+1} == I + m^{n+2}  (Nakayama)
    ft, gt = _integer_terms(germ(f)), _integer_terms(germ(g))
    return _codim(ft, gt, n + 1) == _codim(ft, gt, n + 2)


# ---------------------------------------------------------------------------
# Noether's formula by iterated blow-ups


@dataclass
class BlowupNode:
    """An infinitely near point where both strict transforms pass."""

    center: str
    multiplicities: tuple[int, int]
    children: list[BlowupNode] = field(default_factory=list)

    def contribution(self) -> int:
        return self.multiplicities[0] * self.multiplicities[1]

    def walk(self) -> Iterator[BlowupNode]:
        yield self
        for c in self.children:
            yield from c.walk()

    def paths(self) -> Iterator[list[BlowupNode]]:
        """Root-to-leaf chains of infinitely near points."""
        if not self.children:
            yield [self]
            return
        for c in self.children:
            for p in c.paths():
                yield [self] + p

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "e": list(self.multiplicities),
            "children": [c.to_dict() for c in self.children],
        }

    def render(self, indent: int = 0) -> list[str]:
        e1, e2 = self.multiplicities
        lines = ["  " * indent + f"{self.center}: e=({e1},{e2}) contributes {e1 * e2}"]
        for c in self.children:
            lines.extend(c.render(indent + 1))
        return lines


@dataclass
class NoetherResult:
    degree: int
    tree: BlowupNode

    def multiplicity_sum(self) -> int:
        return sum(sum(node.multiplicities) for node in self.tree.walk())


def _univariate(p: SparsePoly, var: int, fixed: int) -> list[Fraction]:
    """Coefficients (ascending) of a homogeneous form with the other variable set to 1."""
    coeffs: dict[int, Fraction] = {}
    for m, c in p.items():
        coeffs[m[var]] = coeffs.get(m[var], Fraction(0)) + c
    deg = max(coeffs, default=-1)
    return [coeffs.get(i, Fraction(0)) for i in range(deg + 1)]


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(list(a)), _trim(list(b))
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, bv in enumerate(b):
            a[i + shift] -= c * bv
        a = _trim(a)
    return q, a


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _rational_roots(p: list[Fraction]) -> tuple[list[Fraction], int]:
    """Distinct rational roots and the degree of the root-free remainder."""
    p = _trim(p)
    roots: list[Fraction] = []
    while len(p) > 1 and p[0] == 0:
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
        p = p[1:]
    if len(p) <= 1:
        return roots, 0
    den = lcm(*(c.denominator for c in p))
    ints = [int(c * den) for c in p]
    candidates = {Fraction(s * a, b) for a in _divisors(ints[0]) for b in _divisors(ints[-1]) for s in (1, -1)}
    for r in sorted(candidates):
        while len(p) > 1:
            q, rem = _poly_divmod(p, [-r, Fraction(1)])
            if rem:
                break
            if r not in roots:
                roots.append(r)
            p = q
    return sorted(roots), len(_trim(p)) - 1


def _strict_transform(p: SparsePoly, chart: int, shift: Fraction, e: int) -> SparsePoly:
    """Blow up the origin and translate the chosen point of the exceptional line to the origin.

    ``chart == 1``: ``y -> x (y + shift)``, divide by ``x^e``.
    ``chart == 2``: ``x -> x y``, divide by ``y^e`` (the point at infinity of chart 1).
    """
    x = SparsePoly.variable(2, 0)
    y = SparsePoly.variable(2, 1)
    if chart == 1:
        q = p.substitute(1, x * (y + shift))
        return q.shift_down(0, e)
    q = p.substitute(0, x * y)
    return q.shift_down(1, e)


def noether_degree(f: SparsePoly, g: SparsePoly, depth_cap: int = DEFAULT_DEPTH_CAP) -> NoetherResult:
    """Local intersection number as ``sum e_Q(f) e_Q(g)`` over shared infinitely near points."""
    f, g = germ(f), germ(g)
    factor = common_factor(f, g)
    if factor is not None:
        raise InfiniteColength(f"infinite colength: common factor {factor}", f"common factor {factor}")
    tree = _expand(f, g, "origin", 0, depth_cap)
    return NoetherResult(sum(n.contribution() for n in tree.walk()), tree)


def _expand(f: SparsePoly, g: SparsePoly, center: str, depth: int, depth_cap: int) -> BlowupNode:
    if depth > depth_cap:
        raise DepthExceeded(f"blow-up depth exceeded {depth_cap}")
    e1, e2 = f.order(), g.order()
    node = BlowupNode(center, (e1, e2))
    lf, lg = f.homogeneous_part(e1), g.homogeneous_part(e2)
    # chart 1 points (1 : t): roots of lf(1, t), lg(1, t)
    h = _poly_gcd(_univariate(lf, 1, 0), _univariate(lg, 1, 0))
    if len(h) > 1:
        roots, leftover = _rational_roots(h)
        if leftover > 0:
            raise IrrationalCenter(f"common tangent at {center} is irrational over Q")
        for t in roots:
            label = f"y=x*({format_rational(t)}+y')" if t else "y=x*y'"
            child_f = _strict_transform(f, 1, t, e1)
            child_g = _strict_transform(g, 1, t, e2)
            node.children.append(_expand(child_f, child_g, f"{center} > {label}", depth + 1, depth_cap))
    # chart 2 origin (0 : 1): both leading forms lack the pure y^e term
    if lf.coeff((0, e1)) == 0 and lg.coeff((0, e2)) == 0:
        child_f = _strict_transform(f, 2, Fraction(0), e1)
        child_g = _strict_transform(g, 2, Fraction(0), e2)
        node.children.append(_expand(child_f, child_g, f"{center} > x=x'*y", depth + 1, depth_cap))
    return node


# ---------------------------------------------------------------------------
# l_n and its certification


def l_n(n: int) -> int:
    """Maximal degree of a Gorenstein cluster whose ideal contains ``m^{n+1}``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (n + 2) ** 2 // 4


def witness_ideal(n: int) -> tuple[SparsePoly, SparsePoly]:
    """``(x^{k+1}, y^{k+1})`` for ``n = 2k`` and ``(x^k, y^{k+1})`` for ``n = 2k-1``."""
    if n % 2 == 0:
        k = n // 2
        a, b = k + 1, k + 1
    else:
        k = (n + 1) // 2
        a, b = k, k + 1
    return SparsePoly(2, {(a, 0): 1}), SparsePoly(2, {(0, b): 1})


@dataclass
class SearchSpec:
    samples: int = 500
    max_deg: int | None = None  # defaults to n + 2
    coefficients: tuple[int, ...] = (-2, -1, 1, 2)
    density: float = 0.5
    max_attempts: int = 200_000


def _random_germ(rng: random.Random, order: int, max_deg: int, spec: SearchSpec) -> SparsePoly:
    terms = {}
    for d in range(order, max_deg + 1):
        for a in range(d + 1):
            if rng.random() < spec.density:
                terms[(a, d - a)] = rng.choice(spec.coefficients)
    if not any(a + b == order for a, b in terms):
        a = rng.randrange(order + 1)
        terms[(a, order - a)] = rng.choice(spec.coefficients)
    return SparsePoly(2, terms)


def l_n_certify(n: int, seed: int = 0, search: SearchSpec | None = None, cap: int = 4) -> dict:
    """Check ``l_n`` from both sides: explicit witnesses, monomial ideals, random ideals."""
    if n < 0 or n > cap:
        raise ValueError(f"n must lie in [0, {cap}]")
    spec = search or SearchSpec()
    max_deg = spec.max_deg if spec.max_deg is not None else n + 2
    target = l_n(n)
    report: dict = {"n": n, "l_n": target, "seed": seed}

    wf, wg = witness_ideal(n)
    w_col = colength(wf, wg)
    w_in = contains_power(wf, wg, n)
    w_prev = contains_power(wf, wg, n - 1)
    report["witness"] = {
        "f": format_germ(wf),
        "g": format_germ(wg),
        "colength": w_col,
        "contains_m^{n+1}": w_in,
        "contains_m^n": w_prev,
        "ok": w_col == target and w_in and not w_prev,
    }

    monos = [(a, d - a) for d in range(1, n + 2) for a in range(d + 1)]
    best = 0
    best_pair = None
    admissible = 0
    for (m1, m2) in itertools.combinations(monos, 2):
        if (m1[0] and m2[0]) or (m1[1] and m2[1]):
            continue  # shared variable: common factor through the origin
        f, g = SparsePoly(2, {m1: 1}), SparsePoly(2, {m2: 1})
        if not _contains_power_fast(f, g, n):
            continue
        admissible += 1
        c = colength(f, g)
        if c > best:
            best, best_pair = c, (format_germ(f), format_germ(g))
    report["monomial"] = {
        "pairs_containing": admissible,
        "max_colength": best,
        "argmax": best_pair,
        "ok": best == target,
    }

    rng = random.Random(seed)
    accepted = 0
    attempts = 0
    worst = 0
    counterexamples = []
    while accepted < spec.samples and attempts < spec.max_attempts:
        attempts += 1
        f = _random_germ(rng, rng.randint(1, n + 1), max_deg, spec)
        g = _random_germ(rng, rng.randint(1, n + 1), max_deg, spec)
        ft, gt = _integer_terms(f), _integer_terms(g)
        c_in = _codim(ft, gt, n + 1)
        if c_in != _codim(ft, gt, n + 2):
            continue
        accepted += 1
        worst = max(worst, c_in)
        if c_in > target:
            counterexamples.append({"f": format_germ(f), "g": format_germ(g), "colength": c_in})
    report["random"] = {
        "accepted": accepted,
        "attempts": attempts,
        "max_colength": worst,
        "counterexamples": counterexamples,
        "ok": accepted == spec.samples and not counterexamples,
    }
    report["ok"] = report["witness"]["ok"] and report["monomial"]["ok"] and report["random"]["ok"]
    return report


# ---------------------------------------------------------------------------
# inequality (*) and the very-ampleness translation


def partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into positive parts, non-increasing."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def predicted_strictness_gap(parts: tuple[int, ...]) -> bool:
    """Equality case of ``sum l_{k_i - 1} <= l_k`` read off from parities.

    With ``floor(m^2/4) = (m^2 - [m odd])/4`` the difference ``4(l_k - sum)``
    equals ``2 sum_{i<j} k_i k_j + 1 - r - [k odd] + #{i : k_i even}``.
    """
    k = sum(parts) - 1
    r = len(parts)
    cross = sum(a * b for a, b in itertools.combinations(parts, 2))
    evens = sum(1 for p in parts if p % 2 == 0)
    return 2 * cross + 1 - r - (k % 2) + evens == 0


def star_inequality(k: int) -> dict:
    if k < 1:
        raise ValueError("k must be at least 1")
    rhs = l_n(k)
    rows = []
    violations = []
    gaps = []
    for parts in partitions(k + 1):
        lhs = sum(l_n(p - 1) for p in parts)
        row = {"partition": list(parts), "lhs": lhs, "rhs": rhs, "holds": lhs <= rhs, "strict": lhs < rhs}
        rows.append(row)
        if lhs > rhs:
            violations.append(list(parts))
        if len(parts) >= 2 and lhs == rhs:
            gaps.append(list(parts))
    predicted = [list(p) for p in partitions(k + 1) if len(p) >= 2 and predicted_strictness_gap(p)]
    return {
        "k": k,
        "l_k": rhs,
        "partitions": rows,
        "violations": violations,
        "strictness_gaps": gaps,
        "predicted_gaps": predicted,
        "note": "strictness gap: the strict form claimed for r >= 2 fails on these partitions" if gaps else "",
    }


def very_ample_order_for_jets(k: int) -> int:
    """``l_k - 1``: (l_k - 1)-very ampleness gives k-jet ampleness on a smooth surface."""
    return l_n(k) - 1
