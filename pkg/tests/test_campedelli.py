from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jetample.campedelli import (
    GROUP,
    SOLUTIONS,
    BiPoint,
    GroupElement,
    act,
    cubic_parts,
    on_complete_intersection,
    on_complete_intersection_all_lambda,
    orbit,
    parse_bipoint,
    same_orbit,
    star_star_holds,
    verify_example_46,
)
from jetample.scalars import Eisenstein

W = Eisenstein.omega()
W2 = W * W
SHIFT = GroupElement(1, 0)
SCALE = GroupElement(0, 1)


def test_equation_examples():
    assert on_complete_intersection(BiPoint([0, 0, 1], [1, -1, 0]), 5)
    assert on_complete_intersection(BiPoint([0, 0, 1], [1, -1, 0]), W)
    assert not on_complete_intersection(BiPoint([1, 1, 1], [1, 1, 1]), 9)
    assert not on_complete_intersection(BiPoint([1, 0, 0], [0, 1, 0]), 3)


def test_star_star_examples():
    assert star_star_holds(BiPoint([0, 0, 1], [1, -1, 0]), 1, 0)
    assert star_star_holds(BiPoint([1, 1, 1], [0, 1, -1]), 0, 1)
    p = BiPoint([1, 0, 0], [1, 0, 0])
    assert star_star_holds(p, 0, 1)
    assert not on_complete_intersection(p, 1)


def test_action_examples():
    p = BiPoint([0, 0, 1], [1, -1, 0])
    assert act(SHIFT, p).same_point(BiPoint([0, 1, 0], [-1, 0, 1]))
    q = act(SCALE, BiPoint([1, 1, 1], [1, 1, 1]))
    assert q.same_point(BiPoint([1, W, W2], [1, W2, W]))
    assert act(GroupElement(0, 0), p) == p


def test_same_orbit_examples():
    p = BiPoint([0, 0, 1], [1, -1, 0])
    assert same_orbit(p, act(SHIFT, p))
    assert same_orbit(p, p)
    assert not same_orbit(p, BiPoint([1, -1, 0], [0, 0, 1]))


def test_projective_equality():
    assert BiPoint([1, W, 1], [0, 1, -W]).same_point(BiPoint([2, 2 * W, 2], [0, W2, -1]))
    assert not BiPoint([1, 0, 0], [1, 0, 0]).same_point(BiPoint([0, 1, 0], [1, 0, 0]))


def test_zero_vector_rejected():
    with pytest.raises(ValueError):
        BiPoint([0, 0, 0], [1, 0, 0])


def test_parse_bipoint():
    p = parse_bipoint("([0,1,-w^2],[1,w^2,1])")
    assert p.same_point(BiPoint([0, 1, -W2], [1, W2, 1]))
    with pytest.raises(ValueError):
        parse_bipoint("[0,1,2]")


def test_listed_solutions():
    assert [ab for ab, _, _ in SOLUTIONS] == [(1, 0), (0, 1), (1, 1), (1, 2)]
    assert SOLUTIONS[2][1].same_point(BiPoint([0, 1, -W2], [1, W2, 1]))
    assert SOLUTIONS[2][2].same_point(BiPoint([1, W, 1], [0, 1, -W]))
    for (a, b), p, q in SOLUTIONS:
        for r in (p, q):
            const, prod = cubic_parts(r)
            assert prod.is_zero()
            assert const.is_zero()
            assert star_star_holds(r, a, b)
        assert not same_orbit(p, q)


def test_full_verification():
    rep = verify_example_46()
    assert rep["ok"]
    assert rep["points_ok"] == 8
    assert rep["orbits_disjoint"] == 4
    assert [c["item"] for c in rep["cases"]] == [1, 2, 3, 4]
    assert "not 1-jet ample" in rep["conclusion"]


def test_group_law():
    for g in GROUP:
        for h in GROUP:
            p = BiPoint([1, 2, W], [3, -1, 1])
            assert act(g * h, p).same_point(act(g, act(h, p)))
    assert len(set(GROUP)) == 9


small_eis = st.builds(Eisenstein, st.integers(-3, 3), st.integers(-3, 3))
vectors = st.lists(small_eis, min_size=3, max_size=3).filter(lambda v: any(not c.is_zero() for c in v))
points = st.builds(BiPoint, vectors, vectors)
group = st.sampled_from(GROUP)


def _equation_pattern(p: BiPoint):
    return tuple(on_complete_intersection_all_lambda(p).values())


@settings(max_examples=150)
@given(points, group, st.integers(-3, 3))
def test_equations_are_invariant(p, g, lam):
    q = act(g, p)
    assert on_complete_intersection(p, lam) == on_complete_intersection(q, lam)
    assert _equation_pattern(p) == _equation_pattern(q)


@settings(max_examples=150)
@given(points, group)
def test_star_star_classes_permuted_consistently(p, g):
    q = act(g, p)
    pattern = lambda r: {(a, b) for a in range(3) for b in range(3) if star_star_holds(r, a, b)}
    # (**) for (a, b) and (-a, -b) describe the same pair of equations
    for a, b in pattern(p):
        assert star_star_holds(p, -a % 3, -b % 3)
    # both generators only rescale each (a, b) pair of sums, so every class is preserved
    assert pattern(p) == pattern(q)


@settings(max_examples=100)
@given(points, points, group, group)
def test_same_orbit_is_equivalence(p, other, g, h):
    q, r = act(g, p), act(h, act(g, p))
    assert same_orbit(p, p)
    assert same_orbit(p, q) and same_orbit(q, p)
    assert same_orbit(q, r) and same_orbit(p, r)
    assert same_orbit(p, other) == same_orbit(other, p)
    assert same_orbit(r, other) == same_orbit(p, other)


@settings(max_examples=100)
@given(points, group)
def test_orbit_size_divides_nine(p, g):
    assert 9 % len(orbit(p)) == 0
    assert same_orbit(p, act(g, p))
