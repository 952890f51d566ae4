"""Sparse multivariate polynomials over Q or Q(w)."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Union

from .numbers import Eisenstein, format_rational

Coeff = Union[Fraction, Eisenstein]
Monomial = tuple[int, ...]


def _normalize_coeff(c: object) -> Coeff:
    if isinstance(c, Eisenstein):
        return c.a if c.is_rational() else c
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _is_zero(c: Coeff) -> bool:
    return c == 0


class SparsePoly:
    """Immutable polynomial in ``nvars`` variables stored as ``{exponents: coeff}``.

    Zero coefficients are never stored. Eisenstein coefficients with zero
    ``w``-part are demoted to plain ``Fraction`` so rational polynomials stay
    in the rational fast path.
    """

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]] = ()):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Coeff] = {}
        for mono, c in items:
            mono = tuple(mono)
            if len(mono) != nvars or any(e < 0 for e in mono):
                raise ValueError(f"bad exponent vector {mono} for {nvars} variables")
            if mono in acc:
                acc[mono] = _normalize_coeff(acc[mono] + c)
            else:
                acc[mono] = _normalize_coeff(c)
        self._terms = {m: c for m, c in acc.items() if not _is_zero(c)}

    # construction helpers

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, Coeff]) -> SparsePoly:
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        return p

    @classmethod
    def constant(cls, nvars: int, c: object) -> SparsePoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> SparsePoly:
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def zero(cls, nvars: int) -> SparsePoly:
        return cls._raw(nvars, {})

    # inspection

    @property
    def terms(self) -> dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Coeff]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, mono: Monomial) -> Coeff:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self._terms.values())

    def degree(self) -> int:
        """Maximal total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def order(self) -> int:
        """Minimal total degree of a term (the multiplicity at the origin)."""
        if not self._terms:
            raise ValueError("order of the zero polynomial is undefined")
        return min(sum(m) for m in self._terms)

    def homogeneous_part(self, d: int) -> SparsePoly:
        return SparsePoly._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == d})

    def truncate(self, below: int) -> SparsePoly:
        """Drop every term of total degree ``>= below``."""
        return SparsePoly._raw(self.nvars, {m: c for m, c in self._terms.items() if sum(m) < below})

    def min_exponent(self, var: int) -> int:
        return min(m[var] for m in self._terms)

    # arithmetic

    def _coerce(self, other: object) -> SparsePoly:
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return SparsePoly.constant(self.nvars, other)

    def __add__(self, other: object) -> SparsePoly:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in o._terms.items():
            s = terms[m] + c if m in terms else c
            s = _normalize_coeff(s)
            if _is_zero(s):
                terms.pop(m, None)
            else:
                terms[m] = s
        return SparsePoly._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> SparsePoly:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other: object) -> SparsePoly:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[Monomial, Coeff] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                prod = c1 * c2
                acc[m] = acc[m] + prod if m in acc else prod
        return SparsePoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SparsePoly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = SparsePoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: object) -> SparsePoly:
        return SparsePoly(self.nvars, {m: v * c for m, v in self._terms.items()})

    def shift_down(self, var: int, e: int) -> SparsePoly:
        """Divide by ``x_var**e``; every term must be divisible."""
        terms = {}
        for m, c in self._terms.items():
            if m[var] < e:
                raise ValueError(f"term {m} not divisible by x{var}^{e}")
            mm = list(m)
            mm[var] -= e
            terms[tuple(mm)] = c
        return SparsePoly._raw(self.nvars, terms)

    def map_coeffs(self, fn: Callable[[Coeff], object]) -> SparsePoly:
        return SparsePoly(self.nvars, {m: fn(c) for m, c in self._terms.items()})

    # evaluation / substitution

    def evaluate(self, point: Iterable[object]) -> Coeff:
        pt = list(point)
        if len(pt) != self.nvars:
            raise ValueError("point dimension mismatch")
        total: object = Fraction(0)
        for m, c in self._terms.items():
            term: object = c
            for v, e in zip(pt, m):
                if e:
                    term = term * (v**e)
            total = total + term
        return _normalize_coeff(total)

    def substitute(self, var: int, expr: SparsePoly) -> SparsePoly:
        return poly_substitute(self, var, expr)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction, Eisenstein)):
            return self == SparsePoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"SparsePoly({self})"

    def __str__(self) -> str:
        return format_poly(self)


def poly_substitute(p: SparsePoly, var: int, expr: SparsePoly) -> SparsePoly:
    """Replace variable ``var`` by ``expr`` and expand."""
    if expr.nvars != p.nvars:
        raise ValueError("substitution expression has the wrong variable count")
    powers: dict[int, SparsePoly] = {0: SparsePoly.constant(p.nvars, 1)}
    result = SparsePoly.zero(p.nvars)
    for m, c in p._terms.items():
        e = m[var]
        if e not in powers:
            powers[e] = expr**e
        rest = list(m)
        rest[var] = 0
        result = result + SparsePoly._raw(p.nvars, {tuple(rest): c}) * powers[e]
    return result


def _var_name(i: int, names: tuple[str, ...] | None) -> str:
    if names is not None:
        return names[i]
    return f"x{i}"


def format_poly(p: SparsePoly, names: tuple[str, ...] | None = None) -> str:
    """Render as ``coef*x0^e0*x1^e1 + ...`` (parsable by :func:`parse_poly`)."""
    if p.is_zero():
        return "0"
    # descending total degree, then lexicographic
    order = sorted(p._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    parts = []
    for m, c in order:
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(_var_name(i, names))
            elif e > 1:
                factors.append(f"{_var_name(i, names)}^{e}")
        if isinstance(c, Eisenstein):
            ctext = f"({c})"
            neg = False
        else:
            neg = c < 0
            ctext = format_rational(abs(c))
        if factors and ctext == "1":
            body = "*".join(factors)
        elif factors:
            body = ctext + "*" + "*".join(factors)
        else:
            body = ctext
        parts.append(("-" if neg else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
