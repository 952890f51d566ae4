"""Invariants of rational surface singularities from their resolution graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg


class IndefiniteGraph(ValueError):
    pass


class InvalidGraph(ValueError):
    pass


@dataclass(frozen=True)
class ResolutionGraph:
    """Exceptional curves ``E_i`` with intersection matrix ``egram`` and genera ``p_a(E_i)``."""

    egram: tuple[tuple[int, ...], ...]
    genera: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "egram", tuple(tuple(int(v) for v in row) for row in self.egram))
        genera = tuple(int(g) for g in self.genera) if self.genera else (0,) * len(self.egram)
        object.__setattr__(self, "genera", genera)

    @classmethod
    def chain(cls, n: int, self_int: int = -2) -> ResolutionGraph:
        """A linear chain of ``n`` curves of self-intersection ``self_int`` (A_n for -2)."""
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = self_int
            if i + 1 < n:
                rows[i][i + 1] = rows[i + 1][i] = 1
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[tuple[int, int]], self_int: int | Sequence[int] = -2) -> ResolutionGraph:
        diag = [self_int] * n if isinstance(self_int, int) else list(self_int)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = diag[i]
        for i, j in edges:
            rows[i][j] += 1
            rows[j][i] += 1
        return cls(tuple(tuple(r) for r in rows))

    @property
    def n(self) -> int:
        return len(self.egram)

    def pair(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
        return linalg.bilinear(self.egram, a, b)

    def canonical_degrees(self) -> list[int]:
        """``K_Y . E_i = -E_i**2 - 2 + 2 p_a(E_i)`` by adjunction."""
        return [-self.egram[i][i] - 2 + 2 * self.genera[i] for i in range(self.n)]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.n):
                if j not in seen and self.egram[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == self.n

    def diagnostics(self) -> list[str]:
        """Structural problems; an empty list means the graph is usable."""
        out = []
        if self.n == 0:
            return ["resolution graph is empty"]
        if any(len(row) != self.n for row in self.egram):
            return ["resolution graph matrix is not square"]
        if not linalg.is_symmetric(self.egram):
            out.append("resolution graph matrix is not symmetric")
        if len(self.genera) != self.n or any(g < 0 for g in self.genera):
            out.append("genera must be nonnegative, one per curve")
        if any(self.egram[i][j] < 0 for i in range(self.n) for j in range(self.n) if i != j):
            out.append("exceptional curves must meet nonnegatively")
        if not self.is_connected():
            out.append("resolution graph is not connected")
        if not linalg.is_negative_definite(self.egram):
            out.append("exceptional intersection matrix is not negative definite")
            return out
        for i, k in enumerate(self.canonical_degrees()):
            if k < 0 and self.egram[i][i] == -1:
                out.append(f"curve {i} is a (-1)-curve: resolution is not minimal")
        if not out:
            z = fundamental_cycle(self)
            if arithmetic_genus(self, z) != 0:
                out.append("p_a(Z) != 0: singularity is not rational")
        return out

    def require_valid(self) -> None:
        problems = self.diagnostics()
        if problems:
            if any("negative definite" in p for p in problems):
                raise IndefiniteGraph("; ".join(problems))
            raise InvalidGraph("; ".join(problems))


@dataclass(frozen=True)
class PointDatum:
    label: str
    graph: ResolutionGraph | None = None  # None means a smooth point

    @property
    def smooth(self) -> bool:
        return self.graph is None

    def diagnostics(self) -> list[str]:
        if self.graph is None:
            return []
        return [f"point {self.label}: {d}" for d in self.graph.diagnostics()]


def _check_definite(g: ResolutionGraph) -> None:
    if not linalg.is_negative_definite(g.egram):
        raise IndefiniteGraph("exceptional intersection matrix is not negative definite")


def fundamental_cycle(g: ResolutionGraph, order: Sequence[int] | None = None) -> tuple[int, ...]:
    """Laufer's iteration from ``Z = sum E_i``; ``order`` fixes which violating index is bumped first."""
    _check_definite(g)
    z = [1] * g.n
    prio = list(order) if order is not None else list(range(g.n))
    while True:
        bump = next((i for i in prio if sum(z[j] * g.egram[j][i] for j in range(g.n)) > 0), None)
        if bump is None:
            return tuple(z)
        z[bump] += 1


def arithmetic_genus(g: ResolutionGraph, cycle: Sequence[Fraction | int]) -> Fraction:
    """``1 + (C**2 + K_Y.C)/2`` for an exceptional cycle ``C``."""
    kc = sum(Fraction(c) * k for c, k in zip(cycle, g.canonical_degrees()))
    return 1 + (g.pair(cycle, cycle) + kc) / 2


def discrepancy_cycle(g: ResolutionGraph) -> tuple[Fraction, ...]:
    """Solve ``Delta . E_i = -K_Y . E_i`` on the exceptional lattice."""
    _check_definite(g)
    rhs = [-Fraction(k) for k in g.canonical_degrees()]
    return tuple(linalg.solve(linalg.to_fraction_matrix(g.egram), rhs))


def delta_k(g: ResolutionGraph, k: int) -> Fraction:
    """``-((k+1) Z + Delta)**2``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    z = fundamental_cycle(g)
    delta = discrepancy_cycle(g)
    c = [(k + 1) * zi + di for zi, di in zip(z, delta)]
    return -g.pair(c, c)


def delta_point(p: PointDatum, k: int) -> Fraction:
    """``(k+1)**2`` at a smooth point, ``-(k Z + Delta)**2`` at a rational singular point."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if p.graph is None:
        return Fraction((k + 1) ** 2)
    return delta_k(p.graph, k - 1)


def trivial_degree_bound(g: ResolutionGraph | None, k: int) -> Fraction:
    """Length of ``O/m^{k+1}``: ``(k+1)(k+2)/2`` when smooth, ``(k+1)(-k Z**2 + 2)/2`` otherwise."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if g is None:
        return Fraction((k + 1) * (k + 2), 2)
    z = fundamental_cycle(g)
    return Fraction((k + 1) * (-k * g.pair(z, z) + 2), 2)


def du_val_graph(kind: str) -> ResolutionGraph:
    """Dynkin graphs ``A<n>``, ``D<n>`` (n >= 4), ``E6``, ``E7``, ``E8`` of (-2)-curves."""
    kind = kind.upper()
    letter, n = kind[0], int(kind[1:])
    if letter == "A" and n >= 1:
        return ResolutionGraph.chain(n)
    if letter == "D" and n >= 4:
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        return ResolutionGraph.from_edges(n, edges)
    if letter == "E" and n in (6, 7, 8):
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        return ResolutionGraph.from_edges(n, edges)
    raise ValueError(f"unknown Du Val type {kind!r}")
