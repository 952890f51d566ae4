from __future__ import annotations

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from jetample import bundled
from jetample.cluster import (
    InfiniteColength,
    IrrationalCenter,
    SearchSpec,
    colength,
    contains_power,
    germ,
    l_n,
    l_n_certify,
    noether_degree,
    partitions,
    predicted_strictness_gap,
    star_inequality,
    very_ample_order_for_jets,
    witness_ideal,
)
from jetample.scalars import SparsePoly

from oracles import branch_intersection, monomial_staircase

CORPUS = bundled.germ_pairs()


def G(text):
    return germ(text)


# --- colength ---------------------------------------------------------------------


@pytest.mark.parametrize(
    "f, g, value",
    [("x", "y", 1), ("x^2", "y^3", 6), ("y - x^2", "y^2", 4), ("y", "x^3", 3), ("y^2 - x^3", "x", 2)],
)
def test_colength_examples(f, g, value):
    assert colength(G(f), G(g)) == value


def test_corpus_is_large_enough():
    assert len(CORPUS) >= 20
    named = {(f.replace(" ", ""), g.replace(" ", "")) for f, g, _ in CORPUS}
    for pair in [("y", "x^3"), ("y^2-x^3", "x"), ("y-x^2", "y^2"), ("x^2", "y^3")]:
        assert pair in named


@pytest.mark.parametrize("f, g, branches", CORPUS, ids=[f"{f};{g}" for f, g, _ in CORPUS])
def test_corpus_against_branch_oracle(f, g, branches):
    expected = branch_intersection(f, g, branches)
    assert colength(G(f), G(g)) == expected
    assert noether_degree(G(f), G(g)).degree == expected


def _containment_order(f, g) -> int:
    return next(n for n in range(0, 40) if contains_power(f, g, n))


@pytest.mark.parametrize("f, g, branches", CORPUS, ids=[f"{f};{g}" for f, g, _ in CORPUS])
def test_tree_invariants(f, g, branches):
    res = noether_degree(G(f), G(g))
    assert res.degree == sum(node.contribution() for node in res.tree.walk())
    assert 4 * res.degree <= res.multiplicity_sum() ** 2
    n = _containment_order(G(f), G(g))
    assert res.degree <= l_n(n)


def test_multiplicity_sum_does_not_bound_containment_order():
    # (y - x - x^2, y - x) = (x^2, y - x) contains m^2, yet the tree has two (1,1) points
    f, g = G("y - x - x^2"), G("y - x")
    assert contains_power(f, g, 1)
    res = noether_degree(f, g)
    assert [node.multiplicities for node in res.tree.walk()] == [(1, 1), (1, 1)]
    assert res.multiplicity_sum() - 2 == 2 > 1
    failures = [
        (f, g)
        for f, g, _ in CORPUS
        if _containment_order(G(f), G(g)) < noether_degree(G(f), G(g)).multiplicity_sum() - 2
    ]
    assert ("y - x^2", "y^2") in failures
    assert len(failures) == 22


def test_tree_example_shapes():
    assert noether_degree(G("y"), G("x^3")).tree.multiplicities == (1, 3)
    t = noether_degree(G("y^2 - x^3"), G("x")).tree
    assert t.multiplicities == (2, 1) and t.children == []
    t = noether_degree(G("x"), G("y")).tree
    assert t.multiplicities == (1, 1) and t.children == []


@pytest.mark.parametrize(
    "gens",
    [[(2, 0), (0, 3)], [(3, 0), (0, 3)], [(1, 0), (0, 5)], [(4, 0), (0, 1)], [(5, 0), (0, 4)]],
)
def test_monomial_cis_match_staircase(gens):
    f, g = (SparsePoly(2, {m: 1}) for m in gens)
    assert colength(f, g) == monomial_staircase(gens)


def test_common_factor_is_certified():
    with pytest.raises(InfiniteColength) as info:
        colength(G("x*y"), G("x*(x+y)"))
    assert "x" in info.value.certificate
    with pytest.raises(InfiniteColength):
        colength(G("y^2 - x^3"), G("(y^2 - x^3)*(x + y)"))
    with pytest.raises(InfiniteColength):
        noether_degree(G("x*y"), G("x^2"))


def test_irrational_tangent_reported():
    with pytest.raises(IrrationalCenter):
        noether_degree(G("y^2 - 2*x^2"), G("y^2 - 2*x^2 + x^3"))


def test_germ_validation():
    with pytest.raises(ValueError):
        germ("1 + x")
    with pytest.raises(ValueError):
        germ("0")


# --- containment -------------------------------------------------------------------


@pytest.mark.parametrize(
    "f, g, n, value",
    [("x", "y", 0, True), ("x^2", "y^2", 2, True), ("x^2", "y^2", 1, False), ("y - x^2", "y^2", 3, True), ("y - x^2", "y^2", 2, False)],
)
def test_contains_examples(f, g, n, value):
    assert contains_power(G(f), G(g), n) is value


@pytest.mark.parametrize("f, g, branches", CORPUS[:12])
def test_contains_monotone(f, g, branches):
    values = [contains_power(G(f), G(g), n) for n in range(0, 12)]
    first = values.index(True)
    assert all(values[first:])


def test_contains_power_requires_finite_colength():
    with pytest.raises(InfiniteColength):
        contains_power(G("x*y"), G("x^2"), 3)


# --- random germs: the two routes agree ------------------------------------------------

terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)).filter(lambda m: 0 < m[0] + m[1] <= 4),
    st.sampled_from([-2, -1, 1, 2]),
    min_size=1,
    max_size=4,
)


@settings(max_examples=60, suppress_health_check=[HealthCheck.too_slow])
@given(terms, terms)
def test_random_pairs_noether_equals_colength(ft, gt):
    f, g = SparsePoly(2, ft), SparsePoly(2, gt)
    try:
        expected = colength(f, g)
    except InfiniteColength:
        with pytest.raises((InfiniteColength, IrrationalCenter)):
            noether_degree(f, g)
        return
    try:
        assert noether_degree(f, g).degree == expected
    except IrrationalCenter:
        pass
    assert colength(g, f) == expected


# --- l_n, (*) and very ampleness ----------------------------------------------------------


def test_l_n_table():
    assert [l_n(n) for n in range(7)] == [1, 2, 4, 6, 9, 12, 16]


@pytest.mark.parametrize("n", range(0, 101))
def test_l_n_parity_forms(n):
    k = n // 2 if n % 2 == 0 else (n + 1) // 2
    expected = (k + 1) ** 2 if n % 2 == 0 else k * (k + 1)
    assert l_n(n) == expected == (n + 2) ** 2 // 4


@pytest.mark.parametrize("n", range(0, 7))
def test_witness_ideals(n):
    f, g = witness_ideal(n)
    assert colength(f, g) == l_n(n)
    assert contains_power(f, g, n)
    assert not contains_power(f, g, n - 1)


def test_certify_small_case():
    report = l_n_certify(1, seed=3, search=SearchSpec(samples=40))
    assert report["ok"]
    assert report["monomial"]["max_colength"] == 2
    assert report["random"]["accepted"] == 40
    with pytest.raises(ValueError):
        l_n_certify(5)


def test_certify_is_deterministic():
    spec = SearchSpec(samples=25)
    assert l_n_certify(2, seed=9, search=spec) == l_n_certify(2, seed=9, search=spec)


def test_partitions():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(list(partitions(10))) == 42


def test_star_examples():
    rows = {tuple(r["partition"]): r for r in star_inequality(3)["partitions"]}
    assert rows[(2, 2)]["lhs"] == 4 and rows[(2, 2)]["strict"]
    one = star_inequality(1)
    assert one["strictness_gaps"] == [[1, 1]]
    rows = {tuple(r["partition"]): r for r in star_inequality(2)["partitions"]}
    assert rows[(1, 1, 1)]["lhs"] == 3 and rows[(1, 1, 1)]["strict"]


@pytest.mark.parametrize("k", range(1, 13))
def test_star_inequality_and_gap_prediction(k):
    rep = star_inequality(k)
    assert rep["violations"] == []
    assert rep["strictness_gaps"] == rep["predicted_gaps"]
    brute = [
        list(p)
        for p in partitions(k + 1)
        if len(p) >= 2 and sum(l_n(q - 1) for q in p) == l_n(k)
    ]
    assert rep["strictness_gaps"] == brute


def test_gap_only_at_k_equal_one():
    gaps = {k: star_inequality(k)["strictness_gaps"] for k in range(1, 13)}
    assert gaps[1] == [[1, 1]]
    assert all(not v for k, v in gaps.items() if k > 1)
    assert predicted_strictness_gap((1, 1))


@pytest.mark.parametrize("k, order", [(0, 0), (1, 1), (2, 3), (3, 5), (4, 8)])
def test_very_ample_order(k, order):
    assert very_ample_order_for_jets(k) == order == k * (k + 4) // 4
