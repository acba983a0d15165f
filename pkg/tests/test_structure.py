import random

import pytest

from weyltype.algebra import Signature, bracket
from weyltype.errors import ScalarInput, ZeroElement
from weyltype.numberfield import QQ
from weyltype.parser import parse_element
from weyltype.sampling import random_element
from weyltype.structure import (Exhausted, NilpotentAt, ReachedOne, SpanDim, Verdict, ad_growth,
                                ad_power, centralizer_check, classify_local, is_in_E_of_F,
                                is_in_N_of_N, nilpotency_bound, simplicity_probe)

from conftest import ALL_SIGS, w010, w100, w110, w111


def P(sig, text):
    return parse_element(sig, text)


def test_ad_power():
    W = w110()
    x = W.x((2,))
    assert ad_power(W.t(1), x, 0) == x
    assert ad_power(W.d(2).scale(3), x, 3) == x.scale(6 ** 3)
    assert not ad_power(W.x((1,)), x, 1)


@pytest.mark.parametrize("text,verdict", [
    ("x[1] + t1", Verdict.CertNilpotent),
    ("d2", Verdict.CertFiniteNotNilpotent),
    ("t1*d2", Verdict.NotLocallyFinite),
    ("d2 + t1*d1", Verdict.NotNilpotentUnknownFinite),
    ("t1*d1", Verdict.Inconclusive),
    ("x[1]*d1^2", Verdict.Inconclusive),
    ("3", Verdict.CertNilpotent),
])
def test_classify_local(text, verdict):
    assert classify_local(P(w110(), text)).verdict is verdict


def test_classify_zero():
    with pytest.raises(ZeroElement):
        classify_local(w110().zero())


def test_ad_growth_examples():
    W = w100()
    assert ad_growth(W.t(1), W.d(1), 6) == NilpotentAt(2)
    V = w110()
    res = ad_growth(V.d(2), V.x((1,)), 5)
    assert res == SpanDim((1,) * 6) and res.stabilized
    u = P(V, "t1*d2")
    grow = ad_growth(u, V.x((1,)), 12)
    assert isinstance(grow, SpanDim) and grow.dims == tuple(range(1, 14))


def test_nilpotency_bound_holds():
    W = w111()
    rng = random.Random(8)
    for _ in range(30):
        u = random_element(W, rng, terms=2, degree_cap=2, alpha_cap=2, A_only=True) + W.d(1)
        v = random_element(W, rng, terms=2, degree_cap=3, alpha_cap=2)
        k = nilpotency_bound(u, v)
        res = ad_growth(u, v, k)
        assert isinstance(res, NilpotentAt) and res.k <= k


def test_nilpotency_exceeds_degree_plus_two():
    # a naive degree + 2 bound would claim k <= 4 here
    W = w100()
    u, v = P(W, "t1^2 + d1"), W.d(1) ** 2
    assert ad_growth(u, v, 20) == NilpotentAt(5)
    assert nilpotency_bound(u, v) == 7


def test_E_and_N_examples():
    W = w110()
    assert is_in_E_of_F(W.x((1,)).scale(5))
    assert not is_in_E_of_F(W.x((1,)) + W.x((2,)))
    assert not is_in_E_of_F(W.t(1))
    assert is_in_N_of_N(W.t(2))
    assert not is_in_N_of_N(W.t(1))
    assert is_in_N_of_N(P(W, "x[3]*t2^2 + 4"))
    with pytest.raises(ZeroElement):
        is_in_E_of_F(W.zero())


def test_E_closed_form_matches_eigen_property():
    # x^a + x^b: d2 has two different eigenvalues on it
    W = w110()
    u = W.x((1,)) + W.x((2,))
    w = bracket(W.d(2), u)
    assert w != u.scale(1) and w != u.scale(2)


def test_centralizer():
    W = w110()
    xs = [W.x((1,)), W.x((-1,))]
    assert centralizer_check(P(W, "t1^2*d1 + x[2]*t2"), xs)
    assert not centralizer_check(W.d(2), xs)
    assert centralizer_check(W.scalar(7), [g for _, g in W.generators()])


def test_probe_examples():
    W = w100()
    res = simplicity_probe(W.t(1))
    assert isinstance(res, ReachedOne) and res.rounds == 1
    res = simplicity_probe(W.t(1) ** 2)
    assert isinstance(res, ReachedOne) and res.rounds <= 2
    V = w010()
    assert isinstance(simplicity_probe(V.x((1,))), ReachedOne)
    with pytest.raises(ScalarInput):
        simplicity_probe(W.scalar(2))


def test_probe_combination_reproduces_one():
    from weyltype.algebra import op_mul

    W = w110()
    u = P(W, "t1^2 + x[1]*t2")
    res = simplicity_probe(u)
    assert isinstance(res, ReachedOne)
    # replay the trace
    elements = [u]
    gens = dict(W.generators())
    for line in res.steps[1:]:
        _, rhs = line.split(" = ")
        a, b = rhs.split("*")
        if a.startswith("["):
            elements.append(op_mul(elements[int(a[1:-1])], gens[b]))
        else:
            elements.append(op_mul(gens[a], elements[int(b[1:-1])]))
    total = W.zero()
    for k, c in res.combination:
        total = total + elements[k].scale(c)
    assert total == W.one()


def test_probe_can_exhaust():
    W = w100()
    res = simplicity_probe(W.t(1) ** 3, steps=1, degree_cap=3)
    assert isinstance(res, Exhausted)
