from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jetample.singularity import (
    IndefiniteGraph,
    PointDatum,
    ResolutionGraph,
    arithmetic_genus,
    delta_k,
    delta_point,
    discrepancy_cycle,
    du_val_graph,
    fundamental_cycle,
    trivial_degree_bound,
)

DU_VAL = ["A1", "A2", "A3", "A4", "A5", "D4", "D5", "D6", "E6", "E7", "E8"]
MINUS3 = ResolutionGraph(((-3,),))


def brute_fundamental_cycle(g: ResolutionGraph, cap: int = 4):
    """Componentwise-minimal positive cycle with ``Z.E_i <= 0``, by exhaustion."""
    good = [
        z
        for z in product(range(1, cap + 1), repeat=g.n)
        if all(sum(z[j] * g.egram[j][i] for j in range(g.n)) <= 0 for i in range(g.n))
    ]
    best = tuple(min(z[i] for z in good) for i in range(g.n))
    assert best in good
    return best


def test_a1_and_a2():
    a1, a2 = du_val_graph("A1"), du_val_graph("A2")
    assert fundamental_cycle(a1) == (1,)
    assert a1.pair((1,), (1,)) == -2
    assert fundamental_cycle(a2) == (1, 1)
    assert a2.pair((1, 1), (1, 1)) == -2


@pytest.mark.parametrize("n", range(1, 6))
def test_a_n_fundamental_cycle(n):
    g = du_val_graph(f"A{n}")
    z = fundamental_cycle(g)
    assert z == (1,) * n
    assert g.pair(z, z) == -2


@pytest.mark.parametrize("kind", DU_VAL)
def test_du_val_invariants(kind):
    g = du_val_graph(kind)
    assert g.diagnostics() == []
    z = fundamental_cycle(g)
    assert g.pair(z, z) == -2
    assert all(sum(z[j] * g.egram[j][i] for j in range(g.n)) <= 0 for i in range(g.n))
    assert discrepancy_cycle(g) == (0,) * g.n
    assert arithmetic_genus(g, z) == 0


@pytest.mark.parametrize("kind", ["A3", "D4", "D5", "A5"])
def test_fundamental_cycle_matches_exhaustion(kind):
    g = du_val_graph(kind)
    assert fundamental_cycle(g) == brute_fundamental_cycle(g)


def test_exceptional_highest_roots():
    # branch node at index 2, arm of length one at the end
    assert fundamental_cycle(du_val_graph("E6")) == (1, 2, 3, 2, 1, 2)
    assert fundamental_cycle(du_val_graph("E7")) == (2, 3, 4, 3, 2, 1, 2)
    assert fundamental_cycle(du_val_graph("E8")) == (2, 4, 6, 5, 4, 3, 2, 3)


@pytest.mark.parametrize("kind", ["A4", "D4", "D5", "E6"])
def test_fundamental_cycle_order_independent(kind):
    g = du_val_graph(kind)
    ref = fundamental_cycle(g)
    for perm in list(permutations(range(g.n)))[:120]:
        assert fundamental_cycle(g, perm) == ref


graphs = st.lists(st.integers(-5, -2), min_size=1, max_size=4).map(
    lambda diag: ResolutionGraph.from_edges(len(diag), [(i, i + 1) for i in range(len(diag) - 1)], diag)
)


@given(graphs)
def test_random_chains_order_independent_and_nonnegative_discrepancy(g):
    ref = fundamental_cycle(g)
    for perm in permutations(range(g.n)):
        assert fundamental_cycle(g, perm) == ref
    assert ref == brute_fundamental_cycle(g, cap=3)
    assert all(d >= 0 for d in discrepancy_cycle(g))


@given(graphs, st.integers(0, 5))
def test_delta_k_increasing_and_index_shift(g, k):
    assert delta_k(g, k + 1) > delta_k(g, k)
    assert delta_point(PointDatum("v", g), k + 1) == delta_k(g, k)


def test_minus_three_curve():
    assert discrepancy_cycle(MINUS3) == (Fraction(1, 3),)
    assert delta_k(MINUS3, 0) == Fraction(16, 3)


def test_chain_discrepancy_zero():
    for n in range(1, 7):
        assert discrepancy_cycle(ResolutionGraph.chain(n)) == (0,) * n


@pytest.mark.parametrize("k", range(0, 7))
def test_delta_k_a1(k):
    assert delta_k(du_val_graph("A1"), k) == 2 * (k + 1) ** 2


def test_delta_k_a2_k0():
    assert delta_k(du_val_graph("A2"), 0) == 2


def test_delta_point_examples():
    smooth = PointDatum("x")
    a1 = PointDatum("v", du_val_graph("A1"))
    assert delta_point(smooth, 2) == 9
    assert delta_point(a1, 2) == 8
    assert delta_point(a1, 1) == 2
    with pytest.raises(ValueError):
        delta_point(smooth, 0)


@pytest.mark.parametrize("k", range(0, 6))
def test_smooth_alignment(k):
    if k >= 1:
        assert delta_point(PointDatum("x"), k) == (k + 1) ** 2
    assert delta_point(PointDatum("x"), k + 1) == (k + 2) ** 2


def test_trivial_degree_bound():
    a1 = du_val_graph("A1")
    assert trivial_degree_bound(None, 2) == 6
    assert trivial_degree_bound(a1, 1) == 4
    for g in (None, a1, MINUS3, du_val_graph("E8")):
        assert trivial_degree_bound(g, 0) == 1


def test_indefinite_graph_rejected():
    g = ResolutionGraph(((-1, 1), (1, -1)))
    with pytest.raises(IndefiniteGraph):
        fundamental_cycle(g)
    with pytest.raises(IndefiniteGraph):
        g.require_valid()


def test_minus_one_curve_flagged():
    g = ResolutionGraph(((-1,),))
    assert any("not minimal" in d for d in g.diagnostics())


def test_non_rational_flagged():
    # a genus-one exceptional curve gives p_a(Z) = 1
    g = ResolutionGraph(((-3,),), (1,))
    assert any("not rational" in d for d in g.diagnostics())
