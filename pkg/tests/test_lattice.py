from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jetample import linalg
from jetample.cone import cone_membership
from jetample.lattice import (
    CURVE_LIST_CAVEAT,
    DivisorClass,
    NotPseudoeffective,
    intersect,
    is_big,
    is_nef,
    is_numerically_trivial,
    is_pseudoeffective,
    self_intersection,
    validate_model,
    zariski_decompose,
)
from jetample.formats import parse_surface

from oracles import brute_zariski_negative_part


def C(*coords):
    return DivisorClass(tuple(Fraction(c) for c in coords))


# --- linear algebra ------------------------------------------------------------


def test_signature_examples():
    assert linalg.signature([[1, 0], [0, -1]]) == (1, 1, 0)
    assert linalg.signature([[1, 0], [0, 1]]) == (2, 0, 0)
    assert linalg.signature([[0, 1], [1, -2]]) == (1, 1, 0)
    assert linalg.signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert linalg.signature([[1, 1], [1, 1]]) == (1, 0, 1)


small = st.integers(-4, 4)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3))
def test_signature_counts_match_sympy(rows):
    import sympy

    sym = [[rows[i][j] + rows[j][i] for j in range(3)] for i in range(3)]
    eig = sympy.Matrix(sym).eigenvals()
    pos = sum(mult for ev, mult in eig.items() if sympy.re(sympy.N(ev, 50)) > 1e-30)
    neg = sum(mult for ev, mult in eig.items() if sympy.re(sympy.N(ev, 50)) < -1e-30)
    p, n, z = linalg.signature(sym)
    assert (p, n, z) == (pos, neg, 3 - pos - neg)


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_solve_round_trip(rows, rhs):
    if linalg.determinant(rows) == 0:
        return
    sol = linalg.solve(rows, rhs)
    assert linalg.mat_vec(rows, sol) == [Fraction(v) for v in rhs]


def test_cone_membership_witness():
    gens = [(0, 1), (1, -1)]
    assert cone_membership(gens, (1, 1)) == [2, 1]
    assert cone_membership(gens, (2, -3)) is None
    assert cone_membership(gens, (0, 0)) == [0, 0]


@given(st.lists(st.integers(0, 5), min_size=3, max_size=3))
def test_cone_membership_finds_combinations(lam):
    gens = [(0, 1, 0), (0, 0, 1), (1, -1, -1)]
    target = [sum(l * g[i] for l, g in zip(lam, gens)) for i in range(3)]
    found = cone_membership(gens, target)
    assert found is not None and all(v >= 0 for v in found)
    assert [sum(l * g[i] for l, g in zip(found, gens)) for i in range(3)] == target


# --- intersection numbers -------------------------------------------------------


def test_intersect_examples(blp2, k3):
    assert intersect(blp2, C(1, -1), C(1, -1)) == 0
    assert intersect(blp2, C(4, 0), C(1, -1)) == 4
    for a in range(-3, 6):
        assert intersect(k3, C(a, 1), C(1, 0)) == 1


vec3 = st.lists(st.integers(-6, 6), min_size=3, max_size=3).map(lambda v: C(*v))


@given(vec3, vec3, vec3, st.integers(-5, 5))
def test_bilinear_and_symmetric(bl2p2, a, b, c, s):
    assert intersect(bl2p2, a, b) == intersect(bl2p2, b, a)
    assert intersect(bl2p2, a + b, c) == intersect(bl2p2, a, c) + intersect(bl2p2, b, c)
    assert intersect(bl2p2, a.scale(s), c) == s * intersect(bl2p2, a, c)


def test_dimension_mismatch(blp2):
    with pytest.raises(ValueError):
        intersect(blp2, C(1), C(1, 0))


# --- nef / pseff / big ------------------------------------------------------------


def test_nef_examples(blp2):
    assert is_nef(blp2, C(1, 0))
    assert not is_nef(blp2, C(1, -2))
    assert is_nef(blp2, C(1, -1))


def test_pseff_examples(blp2, p2):
    assert not is_pseudoeffective(blp2, C(2, -3))
    res = is_pseudoeffective(blp2, C(1, 1))
    assert res and res.witness == (2, 1)  # curve order E, F = H - E
    assert is_pseudoeffective(p2, C(0))
    assert is_pseudoeffective(blp2, C(0, 0))


def test_pseff_fast_path(blp2):
    res = is_pseudoeffective(blp2, C(2, 1), allow_fast_path=True)
    assert res.witness == "lemma-1.2"
    res = is_pseudoeffective(blp2, C(0, 1), allow_fast_path=True)
    assert isinstance(res.witness, tuple)


def test_big_examples(blp2):
    assert is_big(blp2, C(1, 1))
    assert not is_big(blp2, C(1, -1))
    assert not is_big(blp2, C(0, 0))


def test_numerically_trivial(blp2):
    assert is_numerically_trivial(blp2, C(0, 0))
    assert not is_numerically_trivial(blp2, C(0, 1))


def test_caveat_text():
    assert "declared curve list" in CURVE_LIST_CAVEAT


# --- Zariski ---------------------------------------------------------------------


def test_zariski_examples(blp2):
    pair = zariski_decompose(blp2, C(1, 1))
    assert pair.positive.coords == (1, 0)
    assert [(blp2.curves[i].label, c) for i, c in pair.negative] == [("E", 1)]
    pair = zariski_decompose(blp2, C(0, 2))
    assert pair.positive.coords == (0, 0)
    assert [(blp2.curves[i].label, c) for i, c in pair.negative] == [("E", 2)]
    nef = C(3, -1)
    assert zariski_decompose(blp2, nef).negative == ()


def test_zariski_rejects_non_pseff(blp2):
    with pytest.raises(NotPseudoeffective):
        zariski_decompose(blp2, C(2, -3))


def test_zariski_rational_coefficients(f3):
    # F3: S^2 = -3, D = F + S meets S in -2, so N = (2/3) S
    pair = zariski_decompose(f3, C(1, 1))
    assert pair.negative == ((1, Fraction(2, 3)),)
    assert pair.positive.coords == (1, Fraction(1, 3))


@pytest.mark.parametrize("d", [(1, 1), (0, 3), (2, 5), (1, 2)])
def test_zariski_matches_grid_oracle(f3, d):
    gram = [[0, 1], [1, -3]]
    curves = [(1, 0), (0, 1)]
    total, coeffs = brute_zariski_negative_part(gram, curves, d)
    pair = zariski_decompose(f3, C(*d))
    found = {i: c for i, c in pair.negative}
    assert tuple(found.get(i, 0) for i in range(2)) == coeffs


def zariski_invariants_hold(m, d) -> bool:
    pair = zariski_decompose(m, d)
    p = pair.positive
    if not is_nef(m, p):
        return False
    if any(intersect(m, p, m.curves[i].cls) != 0 for i, _ in pair.negative):
        return False
    support = [i for i, _ in pair.negative]
    if support:
        sub = [[intersect(m, m.curves[i].cls, m.curves[j].cls) for j in support] for i in support]
        if not linalg.is_negative_definite(sub):
            return False
    if (p + pair.negative_class(m)).coords != d.coords:
        return False
    return zariski_decompose(m, p).negative == ()


def random_pseff_classes(m, count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        coords = [rng.randint(-4, 8) for _ in range(m.rank)]
        d = m.divisor(coords)
        if is_pseudoeffective(m, d):
            out.append(d)
    return out


def test_zariski_sweep(bl2p2, f3, k3, blp2):
    for m, seed in ((bl2p2, 1), (f3, 2), (k3, 3), (blp2, 4)):
        for d in random_pseff_classes(m, 50, seed):
            assert zariski_invariants_hold(m, d), d


def test_big_consistency(bl2p2):
    for d in random_pseff_classes(bl2p2, 60, 7):
        if self_intersection(bl2p2, d) > 0 and is_nef(bl2p2, d):
            assert is_big(bl2p2, d)


@given(st.lists(st.integers(-5, 8), min_size=3, max_size=3))
def test_nef_implies_nonnegative_square(bl2p2, coords):
    d = C(*coords)
    if all(intersect(bl2p2, d, c.cls) >= 0 for c in bl2p2.curves):
        assert self_intersection(bl2p2, d) >= 0


# --- validation --------------------------------------------------------------------


def test_validate_examples(blp2, k3):
    assert validate_model(blp2).signature == (1, 1, 0)
    assert validate_model(blp2).valid
    assert validate_model(k3).valid


def test_validate_flags_hodge_violation():
    text = "RANK 2\nGRAM\n1 0\n0 1\nCANONICAL 0 0\nCURVES\n1 0 A\n"
    rep = validate_model(parse_surface(text, "bad", validate=False))
    assert not rep.valid
    assert rep.signature[:2] == (2, 0)
    assert any("Hodge" in d for d in rep.diagnostics)


def test_validate_flags_negative_pairs():
    text = "RANK 2\nGRAM\n1 0\n0 -1\nCANONICAL -3 1\nCURVES\n0 1 E\n1 1 B\n"
    rep = validate_model(parse_surface(text, "bad", validate=False))
    assert any("meet negatively" in d for d in rep.diagnostics)


def test_zariski_independent_of_curve_order(bl2p2):
    from dataclasses import replace

    d = bl2p2.divisor([1, 2, 2])
    ref = zariski_decompose(bl2p2, d).positive
    for perm in permutations(bl2p2.curves):
        assert zariski_decompose(replace(bl2p2, curves=tuple(perm)), d).positive == ref
