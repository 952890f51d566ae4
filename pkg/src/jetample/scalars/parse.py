"""Plain-text expression grammar for polynomials over Q(w).

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'|'/'] factor)*      # juxtaposition means '*'
    factor := atom (('^'|'**') INT)?
    atom   := INT | NAME | '(' expr ')' | '-' factor

``w`` is reserved for the primitive cube root of unity (w^2 + w + 1 = 0).
Division is only allowed by nonzero constants.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .numbers import Eisenstein
from .poly import SparsePoly

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9']*)|(\*\*|[-+*/^()]))")

OMEGA_NAME = "w"


class ExpressionError(ValueError):
    """Raised for malformed expressions; carries the column of the failure."""

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column + 1})")
        self.column = column


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        col = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), col))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), col))
        else:
            tokens.append(("op", m.group(3), col))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.variables = list(variables)
        self.nvars = len(self.variables)

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, col = self.take()
        if val != value:
            raise ExpressionError(f"expected {value!r}, found {val or 'end of input'!r}", col)

    def parse(self) -> SparsePoly:
        result = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ExpressionError(f"unexpected {val!r}", col)
        return result

    def expr(self) -> SparsePoly:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in ("+", "-"):
                self.take()
                rhs = self.term()
                acc = acc + rhs if val == "+" else acc - rhs
            else:
                return acc

    def _starts_atom(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self) -> SparsePoly:
        acc = self.factor()
        while True:
            kind, val, col = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                divisor = self.factor()
                if divisor.degree() > 0 or divisor.is_zero():
                    raise ExpressionError("division only by nonzero constants", col)
                acc = acc.scale(Eisenstein.coerce(divisor.coeff((0,) * self.nvars)).inverse())
            elif self._starts_atom():
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> SparsePoly:
        base = self.atom()
        kind, val, col = self.peek()
        if kind == "op" and val in ("^", "**"):
            self.take()
            kind, val, col = self.take()
            if kind != "int":
                raise ExpressionError("exponent must be a nonnegative integer", col)
            base = base ** int(val)
        return base

    def atom(self) -> SparsePoly:
        kind, val, col = self.take()
        if kind == "int":
            return SparsePoly.constant(self.nvars, int(val))
        if kind == "name":
            if val == OMEGA_NAME:
                return SparsePoly.constant(self.nvars, Eisenstein.omega())
            if val in self.variables:
                return SparsePoly.variable(self.nvars, self.variables.index(val))
            raise ExpressionError(f"unknown name {val!r}", col)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and val == "-":
            return -self.factor()
        raise ExpressionError(f"unexpected {val or 'end of input'!r}", col)


def parse_poly(text: str, variables: Sequence[str] = ("x", "y")) -> SparsePoly:
    """Parse an expression into a :class:`SparsePoly` over the given variables."""
    return _Parser(text, variables).parse()


def parse_eisenstein(text: str) -> Eisenstein:
    """Parse a constant expression such as ``"1-w"``, ``"-w^2"`` or ``"1/2+3*w"``."""
    p = parse_poly(text, ())
    return Eisenstein.coerce(p.coeff(()))


def parse_scalar(text: str) -> Fraction:
    """Parse a rational constant expression (``w`` not allowed)."""
    value = parse_eisenstein(text)
    if not value.is_rational():
        raise ValueError(f"{text!r} is not rational")
    return value.a
