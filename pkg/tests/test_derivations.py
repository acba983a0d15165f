import random

import pytest

from weyltype.algebra import Monomial, Signature
from weyltype.derivations import (DerivationVector, dual_basis, pairing, rewrite_from_dual,
                                  rewrite_in_dual)
from weyltype.errors import NotABasis
from weyltype.numberfield import QQ
from weyltype.parser import parse_element
from weyltype.sampling import random_element

from conftest import w011_sqrt2, w110, w111


def test_pairing():
    W = w110()
    d2 = DerivationVector.make(W, [0, 1])
    assert pairing(W, d2, (3,)) == 3
    d1 = DerivationVector.make(W, [5, 0])
    assert pairing(W, d1, (3,)) == 0
    assert pairing(W, d2, (0,)) == 0


def test_pairing_agrees_with_bracket():
    W = w111()
    der = DerivationVector.make(W, [2, 3, -1])
    x = W.x((1, 2))
    from weyltype.algebra import bracket
    assert bracket(der.element(W), x) == x.scale(pairing(W, der, (1, 2)))


def _plane():
    return Signature.build(0, 2, 0, QQ, [[1, 0], [0, 1]])


def test_dual_basis_example():
    W = _plane()
    db = dual_basis(W, [(1, 0), (1, 1)])
    d1 = DerivationVector(db.to_partial[0]).element(W)
    d2 = DerivationVector(db.to_partial[1]).element(W)
    assert d1 == parse_element(W, "d1 - d2")
    assert d2 == W.d(2)
    for p, a in enumerate(db.chosen):
        for q in range(2):
            assert pairing(W, DerivationVector(db.to_partial[q]), a) == int(p == q)


def test_standard_dual_basis_is_identity():
    W = _plane()
    db = dual_basis(W, [(1, 0), (0, 1)])
    assert db.to_partial == db.to_dual


def test_dependent_choice():
    with pytest.raises(NotABasis):
        dual_basis(_plane(), [(1, 1), (2, 2)])


def test_rewrite_example():
    W = _plane()
    db = dual_basis(W, [(1, 0), (1, 1)])
    form = rewrite_in_dual(parse_element(W, "d1*d2"), db)
    one = QQ(1)
    z = (0, 0)
    assert form == {Monomial(z, z, (1, 1)): one, Monomial(z, z, (0, 2)): one}
    assert rewrite_in_dual(W.scalar(4), db) == {Monomial(z, z, z): QQ(4)}


def test_l1_axes_untouched():
    W = w110()
    db = dual_basis(W, [(1,)])
    form = rewrite_in_dual(W.d(1), db)
    assert form == {Monomial((0,), (0, 0), (1, 0)): QQ(1)}


@pytest.mark.parametrize("make", [w111, w011_sqrt2])
def test_round_trip(make):
    W = make()
    rng = random.Random(4)
    n = W.n
    chosen = [tuple(int(r == c) + (1 if c == 0 and r > 0 else 0) for c in range(W.gamma.rank))
              for r in range(n)]
    db = dual_basis(W, chosen)
    for _ in range(30):
        u = random_element(W, rng, terms=3, degree_cap=4, alpha_cap=2)
        assert rewrite_from_dual(rewrite_in_dual(u, db), db) == u
