"""Exact scalars: rationals, square roots of rationals, and the Eisenstein field Q(w)."""

from __future__ import annotations

import functools
import math
import re
from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; a zero denominator raises ``ValueError``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Number) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Number) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None`` when irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write a positive integer as ``c**2 * s`` with ``s`` squarefree; returns ``(c, s)``."""
    if n <= 0:
        raise ValueError("squarefree_decompose needs a positive integer")
    c, s = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1 if p == 2 else 2
    return c, s * n


@functools.total_ordering
class RootValue:
    """A real number of the form ``q`` or ``sqrt(q)`` with ``q`` rational.

    ``sqrt`` of a perfect rational square is normalized to the plain rational,
    so ``RootValue.sqrt(4) == RootValue.rational(2)`` structurally.
    """

    __slots__ = ("_q", "_is_sqrt")

    def __init__(self, q: Number, is_sqrt: bool = False):
        q = Fraction(q)
        if is_sqrt:
            if q < 0:
                raise ValueError("square root of a negative rational")
            root = rational_sqrt(q)
            if root is not None:
                q, is_sqrt = root, False
        self._q = q
        self._is_sqrt = is_sqrt

    @classmethod
    def rational(cls, q: Number) -> RootValue:
        return cls(q, False)

    @classmethod
    def sqrt(cls, q: Number) -> RootValue:
        return cls(q, True)

    @property
    def is_rational(self) -> bool:
        return not self._is_sqrt

    @property
    def radicand(self) -> Fraction:
        """The rational under the root (for rational values, ``q`` itself)."""
        return self._q

    def as_fraction(self) -> Fraction:
        if self._is_sqrt:
            raise ValueError(f"{self} is irrational")
        return self._q

    def signed_square(self) -> Fraction:
        """``sign(v) * v**2``; strictly monotone in ``v``, so it orders RootValues."""
        if self._is_sqrt:
            return self._q
        return self._q * abs(self._q)

    def square(self) -> Fraction:
        return self._q if self._is_sqrt else self._q * self._q

    def scale(self, c: Number) -> RootValue:
        """Multiply by a rational ``c``; ``c * sqrt(q) = sqrt(c**2 q)`` for ``c >= 0``."""
        c = Fraction(c)
        if not self._is_sqrt:
            return RootValue.rational(c * self._q)
        if c < 0:
            raise ValueError("negative multiples of a square root are not RootValues")
        return RootValue.sqrt(c * c * self._q)

    def __float__(self) -> float:
        return math.sqrt(self._q) if self._is_sqrt else float(self._q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RootValue.rational(other)
        if not isinstance(other, RootValue):
            return NotImplemented
        return self._is_sqrt == other._is_sqrt and self._q == other._q

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RootValue.rational(other)
        if not isinstance(other, RootValue):
            return NotImplemented
        return root_value_compare(self, other) < 0

    def __hash__(self) -> int:
        return hash((self._q, self._is_sqrt))

    def __repr__(self) -> str:
        return f"RootValue({self})"

    def __str__(self) -> str:
        if self._is_sqrt:
            return f"sqrt({format_rational(self._q)})"
        return format_rational(self._q)


def root_value_compare(a: RootValue, b: RootValue) -> int:
    """Exact three-way comparison: -1, 0 or 1."""
    sa, sb = a.signed_square(), b.signed_square()
    return (sa > sb) - (sa < sb)


def compare_sqrt_sum(radicands: Iterable[Number], target: Number) -> int:
    """Compare ``sum(sqrt(r) for r in radicands)`` with a rational ``target``.

    Equality is decided with the linear independence of square roots of
    distinct squarefree integers over Q; the strict sign is then settled by
    integer-square-root bracketing at increasing precision.
    """
    rational_part = Fraction(0)
    irrational: dict[int, Fraction] = {}
    for r in radicands:
        r = Fraction(r)
        if r < 0:
            raise ValueError("negative radicand")
        if r == 0:
            continue
        # sqrt(n/d) = sqrt(n*d)/d = c*sqrt(s)/d
        c, s = squarefree_decompose(r.numerator * r.denominator)
        coeff = Fraction(c, r.denominator)
        if s == 1:
            rational_part += coeff
        else:
            irrational[s] = irrational.get(s, Fraction(0)) + coeff
    diff = rational_part - Fraction(target)
    if not irrational:
        return (diff > 0) - (diff < 0)
    # sum of positive multiples of independent irrationals: never equal to a rational
    bits = 32
    while True:
        scale = 1 << bits
        lo = diff * scale
        hi = diff * scale
        for s, coeff in irrational.items():
            root = math.isqrt(s * scale * scale)
            lo += coeff * root
            hi += coeff * (root + 1)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


class Eisenstein:
    """Element ``a + b*w`` of Q(w), where ``w**2 + w + 1 = 0``."""

    __slots__ = ("a", "b")

    def __init__(self, a: Number = 0, b: Number = 0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def omega(cls) -> Eisenstein:
        return cls(0, 1)

    @classmethod
    def coerce(cls, value: object) -> Eisenstein:
        if isinstance(value, Eisenstein):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot coerce {type(value).__name__} to Eisenstein")

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def norm(self) -> Fraction:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self) -> Eisenstein:
        # w -> w**2 = -1 - w
        return Eisenstein(self.a - self.b, -self.b)

    def inverse(self) -> Eisenstein:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conjugate()
        return Eisenstein(c.a / n, c.b / n)

    def __add__(self, other: object) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __sub__(self, other: object) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return Eisenstein(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> Eisenstein:
        return (-self) + other

    def __mul__(self, other: object) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        bd = b * d
        return Eisenstein(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Eisenstein:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: object) -> Eisenstein:
        return Eisenstein.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> Eisenstein:
        return eisenstein_pow(self, n)

    def __eq__(self, other: object) -> bool:
        try:
            o = Eisenstein.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Eisenstein({self})"

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        mag = abs(self.b)
        wpart = "w" if mag == 1 else f"{format_rational(mag)}*w"
        if self.a == 0:
            return wpart if self.b > 0 else f"-{wpart}"
        sign = "+" if self.b > 0 else "-"
        return f"{format_rational(self.a)}{sign}{wpart}"


def eisenstein_pow(z: Eisenstein, n: int) -> Eisenstein:
    """Exact power; negative exponents go through the inverse."""
    if n < 0:
        return eisenstein_pow(z.inverse(), -n)
    result = Eisenstein(1)
    base = z
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def omega_power(n: int) -> Eisenstein:
    """``w**n``; depends only on ``n mod 3``."""
    return (Eisenstein(1), Eisenstein(0, 1), Eisenstein(-1, -1))[n % 3]
