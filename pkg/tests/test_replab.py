from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import MONOIDS, ball_for
from oracles import psd_by_minors
from rlcm import (
    ParabolicInclusion,
    RationalMatrix,
    Representation,
    build_regular_rep,
    check_covariance,
    check_wick,
    diagonal_expectation,
    enumerate_ball,
    extend_by_zero,
    free_presentation,
    lcm,
    parabolic_presentation,
    HomogeneousPresentation,
    psd,
    z_functional,
)
from rlcm.lcm import Lcm, ProvenEmpty
from rlcm.replab import (
    HypothesisError,
    RelationError,
    UnresolvedLcm,
    covariance_items,
    regular_expectation_identity,
    truncated_shift,
    unitary_cycle,
    wick_items,
    z_product,
)
from rlcm.verdict import Fails, Holds, Inconclusive


def resolved_pairs(ball):
    return [(x, y) for x in ball for y in range(x, len(ball))
            if isinstance(lcm(ball, x, y), (Lcm, ProvenEmpty))]


# matrices

def test_matrix_arithmetic():
    A = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert (A @ RationalMatrix.identity(2)) == A
    assert A.T.to_rows() == [[1, 3], [2, 4]]
    assert (A - A).is_zero()
    assert A.scale(Fraction(1, 2))[1, 1] == 2
    assert A.kron(RationalMatrix.identity(2)).shape == (4, 4)
    assert A.to_json() == [["1/1", "2/1"], ["3/1", "4/1"]]


def test_psd_examples():
    S = truncated_shift(4)
    assert psd(RationalMatrix.identity(4) - S @ S.T)
    assert not psd(RationalMatrix.from_rows([[0, 1], [1, 0]]))
    assert psd(RationalMatrix.from_rows([[1, 1], [1, 1]]))
    assert not psd(RationalMatrix.from_rows([[1, 2], [2, 1]]))
    with pytest.raises(ValueError):
        psd(RationalMatrix.from_rows([[1, 2], [0, 1]]))


small = st.integers(-3, 3)


@st.composite
def symmetric(draw):
    n = draw(st.integers(1, 6))
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = Fraction(draw(small), draw(st.sampled_from([1, 2, 3])))
    return rows


@st.composite
def gram(draw):
    # B^T B is PSD, often singular
    n, k = draw(st.integers(1, 6)), draw(st.integers(1, 4))
    B = RationalMatrix.from_rows([[draw(small) for _ in range(n)] for _ in range(k)])
    G = B.T @ B
    if draw(st.booleans()):
        i = draw(st.integers(0, n - 1))
        G = G - RationalMatrix(n, n, {i: {i: Fraction(1, 7)}})
    return G.to_rows()


@settings(max_examples=300, deadline=None)
@given(st.one_of(symmetric(), gram()))
def test_psd_matches_minor_oracle(rows):
    assert psd(RationalMatrix.from_rows(rows)) == psd_by_minors(rows)


def z_corpus():
    """Z(F) matrices of dimension <= 6 from small regular representations."""
    out = []
    for name in MONOIDS:
        for radius in (1, 2):
            ball = enumerate_ball(MONOIDS[name], radius)
            if len(ball) > 6:
                continue
            rep = build_regular_rep(ball)
            for k in (1, 2):
                for F in itertools.combinations(list(ball)[1:], k):
                    try:
                        out.append(z_functional(rep, ball, F))
                    except UnresolvedLcm:
                        pass
    return out


def test_psd_matches_minor_oracle_on_z_corpus():
    corpus = z_corpus()
    assert len(corpus) > 10
    for Z in corpus:
        assert psd(Z) == psd_by_minors(Z.to_rows())


# regular representation

def test_regular_rep_of_n_is_shift():
    ball = enumerate_ball(free_presentation(1), 3)
    rep = build_regular_rep(ball)
    assert rep.generators[0] == truncated_shift(4)


@pytest.mark.parametrize("name", sorted(MONOIDS))
def test_projection_is_ideal_indicator(name):
    ball = ball_for(name)
    rep = build_regular_rep(ball)
    for x in ball:
        P = rep.element(ball, x) @ rep.element(ball, x).T
        assert P.is_diagonal()
        assert {i for i in ball if P[i, i] == 1} == set(ball.multiples[x])


def test_small_examples():
    ball = enumerate_ball(MONOIDS["I2(3)"], 3)
    rep = build_regular_rep(ball)
    Pa, Pb = rep.projection((0,)), rep.projection((1,))
    aba = ball.index((0, 1, 0))
    assert Pa @ Pb == RationalMatrix(len(ball), len(ball), {aba: {aba: 1}})
    f2 = enumerate_ball(free_presentation(2), 2)
    r = build_regular_rep(f2)
    assert (r.projection((0,)) @ r.projection((1,))).is_zero()
    assert (r.generators[0].T @ r.generators[1]).is_zero()


@pytest.mark.parametrize("name", sorted(MONOIDS))
def test_covariance_and_wick_hold_on_resolved_pairs(name, regular_reps):
    ball = ball_for(name)
    rep = regular_reps[name]
    pairs = resolved_pairs(ball)
    assert isinstance(check_covariance(rep, ball, pairs), Holds)
    assert isinstance(check_wick(rep, ball, pairs), Holds)


def test_unresolved_pairs_are_inconclusive(regular_reps):
    ball = ball_for("I2(3)")
    items = covariance_items(regular_reps["I2(3)"], ball, [((0,), (1, 0, 0, 0))])
    assert isinstance(items[0][2], Inconclusive)
    assert isinstance(wick_items(regular_reps["I2(3)"], ball, [((0,), (1, 0, 0, 0))])[0][2], Inconclusive)


def test_equal_shifts_violate_covariance():
    pres = MONOIDS["N2"]
    ball = ball_for("N2")
    S = truncated_shift(4).kron(RationalMatrix.identity(2))
    rep = Representation(pres, [S, S], "S = T")
    v = check_covariance(rep, ball)
    assert isinstance(v, Fails)
    w = v.witness
    i, j = w["entry"]
    x, y = rep.word(w["x"]), rep.word(w["y"])
    lhs = x @ x.T @ y @ y.T
    r = rep.word(w["lcm"])
    assert lhs[i, j] != (r @ r.T)[i, j]
    assert isinstance(check_wick(rep, ball), Fails)


def test_relations_are_checked():
    S = truncated_shift(3)
    with pytest.raises(RelationError):
        Representation(MONOIDS["N2"], [S, S.T])


# expectation

@pytest.mark.parametrize("name", sorted(MONOIDS))
def test_expectation_recovers_diagonal(name, regular_reps):
    ball = ball_for(name)
    rep = regular_reps[name]
    inner = [p for p in ball if ball.lengths[p] <= 2]
    for p in inner:
        for q in inner:
            assert regular_expectation_identity(rep, p, q)


def test_expectation_basic_laws():
    A = RationalMatrix.from_rows([[1, 2], [3, 4]])
    E = diagonal_expectation(A)
    assert diagonal_expectation(E) == E
    assert diagonal_expectation(RationalMatrix.identity(3)) == RationalMatrix.identity(3)
    assert E.to_rows() == [[1, 0], [0, 4]]


# Z(F)

def test_z_of_dihedral_generators():
    ball = enumerate_ball(MONOIDS["I2(3)"], 4)
    rep = build_regular_rep(ball)
    Z = z_functional(rep, ball, [(0,), (1,)])
    assert psd(Z)
    assert Z == z_product(rep, ball, [(0,), (1,)])
    eye = RationalMatrix.identity(len(ball))
    assert Z == (eye - rep.projection((0,))) @ (eye - rep.projection((1,)))


def test_z_single_and_free():
    ball = ball_for("F2")
    rep = build_regular_rep(ball)
    eye = RationalMatrix.identity(len(ball))
    Pa, Pb = rep.projection((0,)), rep.projection((1,))
    assert z_functional(rep, ball, [(0,)]) == eye - Pa
    assert z_functional(rep, ball, [(0,), (1,)]) == eye - Pa - Pb


def test_z_unresolved_raises():
    ball = enumerate_ball(MONOIDS["I2(3)"], 2)
    with pytest.raises(UnresolvedLcm):
        z_functional(build_regular_rep(ball), ball, [(0,), (1,)])


def test_z_requires_contraction():
    pres = free_presentation(1)
    ball = enumerate_ball(pres, 2)
    rep = Representation(pres, [RationalMatrix.from_rows([[2]])])
    with pytest.raises(ValueError):
        z_functional(rep, ball, [(0,)])


def test_extension_by_zero_of_unitary():
    ball = ball_for("I2(3)")
    inc = ParabolicInclusion(ball, frozenset({0}))
    V = Representation(parabolic_presentation(MONOIDS["I2(3)"], {0}), [unitary_cycle(4)])
    T = extend_by_zero(inc, V)
    assert T.generators[1].is_zero()
    za = z_functional(T, ball, [(0,)])
    zab = z_functional(T, ball, [(0,), (1,)])
    assert za.is_zero() and zab.is_zero() and za == zab
    assert psd(zab)


def test_extension_restricts_z_to_submonoid():
    # F with a non-parabolic element gives the same Z as its parabolic part
    ball = ball_for("B4")
    inc = ParabolicInclusion(ball, frozenset({0, 1}))
    sub_pres = parabolic_presentation(MONOIDS["B4"], {0, 1})
    sub_ball = enumerate_ball(sub_pres, 3)
    sub_rep = build_regular_rep(sub_ball)
    V = Representation(sub_pres, sub_rep.generators)
    T = extend_by_zero(inc, V)
    checked = 0
    for F1 in ([(0,)], [(0,), (1,)], [(1, 0)]):
        for extra in ([(2,)], [(2, 1)], [(0, 2)]):
            try:
                whole = z_functional(T, ball, F1 + extra)
            except UnresolvedLcm:
                continue
            assert whole == z_functional(T, ball, F1)
            checked += 1
    assert checked >= 4


def test_full_alphabet_extension_is_identity():
    ball = ball_for("N2")
    inc = ParabolicInclusion(ball, frozenset({0, 1}))
    V = Representation(MONOIDS["N2"], [unitary_cycle(3), unitary_cycle(3)])
    T = extend_by_zero(inc, V)
    assert T.generators == V.generators


def test_extension_needs_closure():
    pres = HomogeneousPresentation(2, frozenset({((1, 1), (0, 0))}))
    ball = enumerate_ball(pres, 3)
    V = Representation(parabolic_presentation(pres, {0}), [unitary_cycle(2)])
    with pytest.raises(HypothesisError):
        extend_by_zero(ParabolicInclusion(ball, frozenset({0})), V)
