import random

import pytest
from hypothesis import given, strategies as st

from weyltype.algebra import (Monomial, Signature, act_on_A, bracket, compare_index, derive,
                              multi_binom, op_mul, semigroup_mul)
from weyltype.errors import AxisOutOfRange, ShapeMismatch, SignatureMismatch
from weyltype.numberfield import QQ
from weyltype.parser import parse_element
from weyltype.sampling import random_A_monomials, random_element

from conftest import w010, w100, w110, w111


def P(sig, text):
    return parse_element(sig, text)


def test_weyl_relation_products():
    W = w100()
    assert op_mul(W.d(1), W.t(1)) == P(W, "t1*d1 + 1")
    assert op_mul(op_mul(W.d(1), W.d(1)), W.t(1)) == P(W, "t1*d1^2 + 2*d1")
    assert op_mul(W.one(), W.t(1)) == W.t(1)


def test_semigroup_product():
    W = w110()
    a = W.monomial(alpha=(1,), i=(1, 0))
    b = W.monomial(alpha=(2,), i=(0, 2))
    assert semigroup_mul(a, b) == W.monomial(alpha=(3,), i=(1, 2))
    assert semigroup_mul(a, W.one()) == a
    assert semigroup_mul(W.t(1), W.t(1)) == W.monomial(i=(2, 0))


def test_derive_examples():
    W = w100()
    assert derive(1, W.t(1) ** 2) == W.t(1).scale(2)
    V = w010()
    assert derive(1, V.monomial(alpha=(1,), i=(1,))) == P(V, "x[1]*t1 + x[1]")
    X = w110()
    assert derive(2, X.x((3,))) == X.x((3,)).scale(3)
    # the l1 axis does not see alpha
    assert not derive(1, X.x((3,)))
    with pytest.raises(AxisOutOfRange):
        derive(3, X.x((1,)))


def test_multi_binom():
    assert multi_binom((2, 1), (1, 1)) == 2
    assert multi_binom((2, 1), (0, 0)) == 1
    assert multi_binom((2, 1), (3, 0)) == 0


def test_compare_index():
    assert compare_index((0, 1), (1, 0)) < 0
    assert compare_index((2, 0), (1, 1)) > 0
    assert compare_index((1, 1), (1, 1)) == 0
    assert compare_index((5, 0), (1, 5)) < 0


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=3, max_size=3))
def test_compare_index_total_order(idx):
    a, b, c = idx
    assert compare_index(a, b) == -compare_index(b, a)
    assert (compare_index(a, b) == 0) == (a == b)
    if compare_index(a, b) <= 0 and compare_index(b, c) <= 0:
        assert compare_index(a, c) <= 0


def test_bracket_examples():
    W = w111()
    assert bracket(W.d(1), W.t(1)) == W.one()
    u = P(W, "t1*d2 + x[1,0]")
    assert not bracket(u, u)
    x = W.x((2, -1))
    assert bracket(W.d(3), x) == x.scale(-1)
    assert bracket(W.d(2), x) == x.scale(2)


def test_act_on_A_examples():
    W = w100()
    assert act_on_A(op_mul(W.t(1), W.d(1)), W.t(1)) == W.t(1)
    assert act_on_A(W.one(), W.t(1) ** 3) == W.t(1) ** 3
    assert act_on_A(W.d(1) ** 2, W.t(1) ** 2) == W.scalar(2)


def test_monomial_shape_checks():
    W = w111()
    with pytest.raises(ShapeMismatch):
        W.monomial(i=(0, 0, 1))
    with pytest.raises(ShapeMismatch):
        W.monomial(alpha=(1,))
    with pytest.raises(AxisOutOfRange):
        W.t(3)


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        op_mul(w100().t(1), w110().t(1))


def test_scalar_arithmetic():
    W = w100()
    assert W.t(1) * 2 == W.t(1) + W.t(1)
    assert W.t(1) - W.t(1) == 0
    assert (W.one() * 3).is_scalar() and (W.one() * 3).scalar_value() == 3
    assert W.zero() == 0


def _triples(sig, seed, count, cap=3):
    rng = random.Random(seed)
    for _ in range(count):
        yield tuple(random_element(sig, rng, terms=2, degree_cap=cap, alpha_cap=2) for _ in range(3))


@pytest.mark.parametrize("make", [w100, w010, w110, w111])
def test_ring_and_lie_identities(make):
    sig = make()
    for u, v, w in _triples(sig, 5, 25):
        assert op_mul(op_mul(u, v), w) == op_mul(u, op_mul(v, w))
        assert op_mul(u, v + w) == op_mul(u, v) + op_mul(u, w)
        assert bracket(u, v) == -bracket(v, u)
        assert not (bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v)))
        # Leibniz rule
        assert bracket(u, op_mul(v, w)) == op_mul(bracket(u, v), w) + op_mul(v, bracket(u, w))
        assert not bracket(sig.scalar(3), u)


@pytest.mark.parametrize("make", [w010, w111])
def test_product_matches_operator_composition(make):
    sig = make()
    rng = random.Random(9)
    basis = random_A_monomials(sig, 2)
    for _ in range(15):
        u = random_element(sig, rng, terms=2, degree_cap=3, alpha_cap=2)
        v = random_element(sig, rng, terms=2, degree_cap=3, alpha_cap=2)
        uv = op_mul(u, v)
        for a in rng.sample(basis, 6):
            assert act_on_A(uv, a) == act_on_A(u, act_on_A(v, a))


def test_derivations_commute():
    sig = w111()
    rng = random.Random(2)
    for _ in range(20):
        a = random_element(sig, rng, terms=3, degree_cap=3, A_only=True)
        for p in range(1, 4):
            for q in range(1, 4):
                assert derive(p, derive(q, a)) == derive(q, derive(p, a))


def test_trivial_gamma_algebra_has_no_x():
    W = w100()
    assert W.gamma.rank == 0
    assert [label for label, _ in W.generators()] == ["t1", "d1"]
