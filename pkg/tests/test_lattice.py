import random

import pytest

from weyltype.errors import DegenerateGroup, ShapeMismatch, SingularBlock, ZeroGenerators
from weyltype.lattice import (BlockMatrix, Equivalent, Inequivalent, Undecided, compare_group_elems,
                              decide_equivalence, gamma_apply, gamma_invariants, gamma_make,
                              gamma_member, verify_witness)
from weyltype.numberfield import QQ, NumberField
from weyltype.sampling import random_block_matrix, random_gamma, random_integer_lattice

SQRT2 = NumberField([-2, 0, 1])
th = SQRT2.theta


def Z(n):
    return gamma_make(QQ, n, [[int(r == c) for c in range(n)] for r in range(n)])


def same_group(g1, g2):
    return g1.contains(g2) and g2.contains(g1)


def test_redundant_generators_reduce():
    g = gamma_make(QQ, 2, [[1, 0], [0, 1], [1, 1]])
    assert g.rank == 2
    assert g == Z(2)


def test_sqrt2_rank_exceeds_dimension():
    g = gamma_make(SQRT2, 1, [[1], [th]])
    assert g.rank == 2
    assert gamma_member(g, [2 + 3 * th]) is not None
    coords = gamma_member(g, [2 + 3 * th])
    assert g.embed(coords) == (2 + 3 * th,)


def test_degenerate():
    with pytest.raises(DegenerateGroup):
        gamma_make(QQ, 2, [[1, 1]])


def test_zero_generators():
    with pytest.raises((ZeroGenerators, DegenerateGroup)):
        gamma_make(QQ, 2, [])


def test_trivial_group_admitted():
    assert gamma_make(QQ, 0, []).rank == 0


def test_membership():
    assert gamma_member(Z(2), [3, -2]) == (3, -2)
    assert gamma_member(gamma_make(QQ, 2, [[2, 0], [0, 1]]), [1, 0]) is None


def test_apply_identity_and_scalar():
    g = gamma_make(QQ, 1, [[2]])
    assert gamma_apply(BlockMatrix.identity(QQ, 1, 0), g) == g
    assert gamma_apply(BlockMatrix.make(QQ, [[2]], [], []), g) == Z(1)


def test_apply_lower_triangular():
    g = BlockMatrix.make(QQ, [[1]], [[1]], [[1]])
    assert gamma_apply(g, Z(2)) == Z(2)
    assert gamma_apply(g, Z(2)) == gamma_make(QQ, 2, [[1, -1], [0, 1]])


def test_block_matrix_validation():
    with pytest.raises(SingularBlock):
        BlockMatrix.make(QQ, [[0]], [[1]], [[1]])
    with pytest.raises(ShapeMismatch):
        BlockMatrix.from_full(QQ, [[1, 1], [0, 1]], 1)


def test_invariants_examples():
    assert tuple(v for _, v in gamma_invariants(Z(2), 1).items()) == (2, 1, 1)
    a = gamma_make(SQRT2, 2, [[1, 1], [th, -th]])
    b = gamma_make(SQRT2, 2, [[1, 0], [0, th]])
    assert tuple(v for _, v in gamma_invariants(a, 1).items()) == (2, 0, 2)
    assert tuple(v for _, v in gamma_invariants(b, 1).items()) == (2, 1, 1)


def test_verify_witness_examples():
    a = gamma_make(QQ, 2, [[1, 1], [1, -1]])
    g = BlockMatrix.make(QQ, [[1, 1], [1, -1]], [], [])
    assert verify_witness(g, a, Z(2))
    assert not verify_witness(BlockMatrix.identity(QQ, 2, 0), a, Z(2))
    assert verify_witness(BlockMatrix.make(QQ, [[2]], [], []), gamma_make(QQ, 1, [[2]]), Z(1))


def test_decide_examples():
    a = gamma_make(QQ, 2, [[1, 1], [1, -1]])
    v = decide_equivalence(a, Z(2), 2, radius=3)
    assert isinstance(v, Equivalent) and verify_witness(v.witness, a, Z(2))
    assert isinstance(decide_equivalence(a, a, 2, radius=3), Equivalent)
    p = gamma_make(SQRT2, 2, [[1, 1], [th, -th]])
    q = gamma_make(SQRT2, 2, [[1, 0], [0, th]])
    v = decide_equivalence(p, q, 1, radius=3)
    assert isinstance(v, Inequivalent)
    assert str(v) == "INEQUIVALENT invariant=rank_cap_V2 lhs=0 rhs=1"


def test_search_finds_scalar_witness():
    # Z + Z th and Z th + Z 2 are related by multiplication by th
    a = gamma_make(SQRT2, 1, [[1], [th]])
    b = gamma_make(SQRT2, 1, [[th], [2]])
    v = decide_equivalence(a, b, 1, radius=2)
    assert isinstance(v, Equivalent) and verify_witness(v.witness, a, b)


def test_radius_zero_is_undecided():
    a = gamma_make(SQRT2, 1, [[1], [th]])
    b = gamma_make(SQRT2, 1, [[1], [3 * th]])
    v = decide_equivalence(a, b, 1, radius=0)
    assert isinstance(v, Undecided)
    assert str(v) == "UNDECIDED radius=0"


def test_group_elem_order():
    g = Z(2)
    assert compare_group_elems(g.element((0, 1)), g.element((1, 0))) < 0
    assert compare_group_elems(g.element((1, 0)), g.element((1, 0))) == 0


@pytest.mark.parametrize("field,shape", [(QQ, (1, 1)), (QQ, (2, 1)), (SQRT2, (1, 1))])
def test_action_is_a_group_action(field, shape):
    rng = random.Random(7)
    for _ in range(5):
        gamma = random_gamma(field, sum(shape), rng)
        g = random_block_matrix(field, *shape, rng)
        h = random_block_matrix(field, *shape, rng)
        assert same_group(gamma_apply(g @ h, gamma), gamma_apply(g, gamma_apply(h, gamma)))
        assert gamma_invariants(gamma_apply(g, gamma), shape[0]) == gamma_invariants(gamma, shape[0])
        assert verify_witness(g, gamma, gamma_apply(g, gamma))


def test_canonical_under_permutation():
    rng = random.Random(3)
    gens = [[rng.randint(-5, 5) for _ in range(3)] for _ in range(5)]
    gens[0], gens[1], gens[2] = [1, 0, 0], [0, 1, 0], [0, 0, 1]
    shuffled = gens[::-1] + [[a + b for a, b in zip(gens[3], gens[4])]]
    assert gamma_make(QQ, 3, gens) == gamma_make(QQ, 3, shuffled)


def test_rational_lattices_never_undecided():
    rng = random.Random(11)
    for n, l2 in [(1, 1), (1, 0), (2, 1), (3, 2)]:
        for _ in range(5):
            a, b = random_integer_lattice(n, rng), random_integer_lattice(n, rng)
            v = decide_equivalence(a, b, l2, radius=1)
            assert isinstance(v, Equivalent)
            assert verify_witness(v.witness, a, b)
