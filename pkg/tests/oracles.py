"""Independent reference computations used to freeze expected values.

Nothing here calls into the package's own colength or blow-up code.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy

t = sympy.Symbol("t")
x, y = sympy.symbols("x y")


def _sym(text: str):
    return sympy.sympify(text.replace("^", "**"), locals={"x": x, "y": y, "t": t})


def branch_intersection(f: str, g: str, branches: list[tuple[str, str]]) -> int:
    """``sum ord_t g(x(t), y(t))`` over the branches of ``f``.

    Each branch is first checked to lie on ``f``; a branch on which ``g``
    vanishes identically means the pair shares a component.
    """
    F, G = _sym(f), _sym(g)
    total = 0
    for xt, yt in branches:
        X, Y = _sym(xt), _sym(yt)
        if sympy.expand(F.subs({x: X, y: Y})) != 0:
            raise AssertionError(f"branch ({xt}, {yt}) is not on {f}")
        restricted = sympy.Poly(sympy.expand(G.subs({x: X, y: Y})), t)
        if restricted.is_zero:
            raise AssertionError(f"{g} contains the branch ({xt}, {yt})")
        total += min(m[0] for m in restricted.monoms())
    return total


def monomial_staircase(generators: list[tuple[int, int]]) -> int | None:
    """Number of monomials outside a monomial ideal, or None when infinite."""
    ax = min((a for a, b in generators if b == 0), default=None)
    by = min((b for a, b in generators if a == 0), default=None)
    if ax is None or by is None:
        return None
    return sum(
        1
        for a, b in product(range(ax), range(by))
        if not any(a >= ga and b >= gb for ga, gb in generators)
    )


def sympy_rank(rows: list[list[int]]) -> int:
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def brute_zariski_negative_part(gram, curves, d, cap: int = 6):
    """Smallest ``N = sum c_i C_i`` over rational grids making ``d - N`` nef.

    Used only on rank-2 examples to confirm the fixpoint solver; the grid is
    ``k/den`` for den up to 4 and coefficients up to ``cap``.
    """

    def pair(a, b):
        return sum(a[i] * gram[i][j] * b[j] for i in range(len(a)) for j in range(len(b)))

    best = None
    steps = sorted({Fraction(k, den) for den in range(1, 5) for k in range(0, cap * den + 1)})
    for coeffs in product(steps, repeat=len(curves)):
        n = [sum(c * cv[i] for c, cv in zip(coeffs, curves)) for i in range(len(d))]
        p = [a - b for a, b in zip(d, n)]
        if all(pair(p, cv) >= 0 for cv in curves):
            total = sum(coeffs)
            if best is None or total < best[0]:
                best = (total, coeffs)
    return best
