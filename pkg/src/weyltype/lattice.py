"""Finitely generated nondegenerate subgroups of F^n and the block-triangular action.

A subgroup is stored through its canonical Z-basis: each generator is
flattened to ``d*n`` rational coordinates, scaled by the least common
denominator, and the integer matrix is put in Hermite normal form.  All
questions about membership, equality and ranks become integer linear
algebra.

The group ``G(l2, l3)`` of invertible matrices ``[[A, 0], [B, C]]`` acts on
row vectors by ``alpha -> alpha g^{-1}``; it maps ``V2 = F^l2 x 0`` to itself,
so the ranks of the intersection with V2 and of the projection to the last
``l3`` coordinates are orbit invariants.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import hnf as _hnf
from . import linalg
from .errors import DegenerateGroup, FieldMismatch, ShapeMismatch, SingularBlock, ZeroGenerators
from .numberfield import FieldElement, NumberField

__all__ = [
    "GammaGroup", "GroupElem", "BlockMatrix", "Equivalent", "Inequivalent", "Undecided",
    "gamma_make", "gamma_member", "gamma_apply", "gamma_invariants", "verify_witness",
    "decide_equivalence", "compare_group_elems",
]


def _flatten(vec, order=None):
    """Concatenate the rational coordinates of an F-vector."""
    idx = range(len(vec)) if order is None else order
    out = []
    for j in idx:
        out.extend(vec[j].coords)
    return out


def _unflatten(field, flat, n, order=None):
    d = field.degree
    idx = list(range(n)) if order is None else list(order)
    vec = [None] * n
    for slot, j in enumerate(idx):
        vec[j] = field.from_coords(flat[slot * d:(slot + 1) * d])
    return tuple(vec)


def _lcm_denominators(rows):
    return math.lcm(1, *(q.denominator for row in rows for q in row))


@dataclass(frozen=True)
class GroupElem:
    """An element of a subgroup, by its integer coordinates in the stored basis."""

    coords: tuple
    embedding: tuple = dc_field(compare=False, hash=False)


def compare_group_elems(a: GroupElem, b: GroupElem) -> int:
    """Lexicographic order on basis coordinates; compatible with addition."""
    return (a.coords > b.coords) - (a.coords < b.coords)


class GammaGroup:
    """A finitely generated additive subgroup of F^n containing an F-basis."""

    def __init__(self, field: NumberField, n: int, denom: int, int_basis):
        self.field = field
        self.n = n
        self.denom = denom
        self.int_basis = tuple(tuple(r) for r in int_basis)
        self.basis = tuple(
            _unflatten(field, [Fraction(v, denom) for v in row], n) for row in self.int_basis
        )
        self._embed_cache = {}

    @property
    def rank(self) -> int:
        return len(self.int_basis)

    def __eq__(self, other):
        if not isinstance(other, GammaGroup):
            return NotImplemented
        return (self.field == other.field and self.n == other.n
                and self.denom == other.denom and self.int_basis == other.int_basis)

    def __hash__(self):
        return hash((self.field, self.n, self.denom, self.int_basis))

    def __repr__(self):
        gens = ", ".join("(" + ", ".join(str(c) for c in b) + ")" for b in self.basis)
        return f"GammaGroup(n={self.n}, rank={self.rank}, basis=[{gens}])"

    def embed(self, coords) -> tuple:
        """The F-vector with the given integer coordinates."""
        coords = tuple(coords)
        vec = self._embed_cache.get(coords)
        if vec is None:
            field = self.field
            vec = [field.zero] * self.n
            for c, b in zip(coords, self.basis):
                if c:
                    vec = [v + c * x for v, x in zip(vec, b)]
            vec = tuple(vec)
            self._embed_cache[coords] = vec
        return vec

    def element(self, coords) -> GroupElem:
        coords = tuple(coords)
        return GroupElem(coords, self.embed(coords))

    def zero(self) -> GroupElem:
        return self.element((0,) * self.rank)

    def member(self, vec):
        """Integer coordinates of ``vec`` in the basis, or None."""
        return gamma_member(self, vec)

    def contains(self, other: GammaGroup) -> bool:
        return all(gamma_member(self, b) is not None for b in other.basis)


def gamma_make(field: NumberField, n: int, generators) -> GammaGroup:
    """The subgroup of F^n generated by ``generators`` (F-vectors or rational tuples)."""
    gens = []
    for g in generators:
        g = tuple(field(c) for c in g)
        if len(g) != n:
            raise ShapeMismatch(f"generator {g} has length {len(g)}, expected {n}")
        gens.append(g)
    if not gens and n > 0:
        raise ZeroGenerators("at least one generator is required")
    flat = [_flatten(g) for g in gens]
    denom = _lcm_denominators(flat)
    rows = _hnf.hnf([[int(q * denom) for q in row] for row in flat])
    group = GammaGroup(field, n, denom, rows)
    if linalg.rank([list(b) for b in group.basis]) < n:
        raise DegenerateGroup(f"generators span less than F^{n}")
    return group


def gamma_member(gamma: GammaGroup, vec):
    """Integer coordinates of ``vec`` in ``gamma``'s basis, or None when not a member."""
    vec = tuple(gamma.field(c) for c in vec)
    if len(vec) != gamma.n:
        raise ShapeMismatch(f"vector has length {len(vec)}, expected {gamma.n}")
    scaled = []
    for q in _flatten(vec):
        q = q * gamma.denom
        if q.denominator != 1:
            return None
        scaled.append(int(q))
    coeffs = _hnf.solve_in_hnf(gamma.int_basis, scaled)
    return None if coeffs is None else tuple(coeffs)


@dataclass(frozen=True)
class BlockMatrix:
    """``[[A, 0], [B, C]]`` with A of size l2, C of size l3, B of shape l3 x l2."""

    A: tuple
    B: tuple
    C: tuple
    field: NumberField

    def __post_init__(self):
        l2, l3 = len(self.A), len(self.C)
        if any(len(r) != l2 for r in self.A) or any(len(r) != l3 for r in self.C):
            raise ShapeMismatch("A and C must be square")
        if len(self.B) != l3 or any(len(r) != l2 for r in self.B):
            raise ShapeMismatch(f"B must be {l3} x {l2}")
        if not linalg.det([list(r) for r in self.A], self.field):
            raise SingularBlock("block A is singular")
        if not linalg.det([list(r) for r in self.C], self.field):
            raise SingularBlock("block C is singular")

    @property
    def l2(self):
        return len(self.A)

    @property
    def l3(self):
        return len(self.C)

    @classmethod
    def make(cls, field, A, B, C):
        conv = lambda m: tuple(tuple(field(x) for x in row) for row in m)
        return cls(conv(A), conv(B), conv(C), field)

    @classmethod
    def from_full(cls, field, matrix, l2):
        m = [[field(x) for x in row] for row in matrix]
        n = len(m)
        if any(len(r) != n for r in m):
            raise ShapeMismatch("matrix must be square")
        if any(m[i][j] for i in range(l2) for j in range(l2, n)):
            raise ShapeMismatch("top-right block must vanish")
        A = [row[:l2] for row in m[:l2]]
        B = [row[:l2] for row in m[l2:]]
        C = [row[l2:] for row in m[l2:]]
        return cls.make(field, A, B, C)

    @classmethod
    def identity(cls, field, l2, l3):
        return cls.from_full(field, linalg.identity(field, l2 + l3), l2)

    def full(self):
        f = self.field
        top = [list(r) + [f.zero] * self.l3 for r in self.A]
        bottom = [list(b) + list(c) for b, c in zip(self.B, self.C)]
        return top + bottom

    def inverse_full(self):
        return linalg.inverse(self.full(), self.field)

    def inverse(self) -> BlockMatrix:
        return BlockMatrix.from_full(self.field, self.inverse_full(), self.l2)

    def __matmul__(self, other: BlockMatrix) -> BlockMatrix:
        prod = linalg.matmul(self.full(), other.full(), self.field)
        return BlockMatrix.from_full(self.field, prod, self.l2)

    def __str__(self):
        rows = self.full()
        return "[" + ",".join("[" + ",".join(str(x) for x in r) + "]" for r in rows) + "]"


def gamma_apply(g: BlockMatrix, gamma: GammaGroup) -> GammaGroup:
    """The image subgroup ``{alpha g^{-1}}``."""
    if g.l2 + g.l3 != gamma.n:
        raise ShapeMismatch(f"block matrix of size {g.l2 + g.l3} cannot act on F^{gamma.n}")
    if g.field != gamma.field:
        raise FieldMismatch("block matrix and subgroup are over different fields")
    if gamma.n == 0:
        return gamma
    ginv = g.inverse_full()
    images = [linalg.vecmat(b, ginv, gamma.field) for b in gamma.basis]
    return gamma_make(gamma.field, gamma.n, images)


def _split_basis(gamma: GammaGroup, l2: int):
    """Integer-coordinate bases of Gamma cap V2 and of a complement in Gamma.

    Columns are reordered so the last l3 F-coordinates come first; in Hermite
    form the rows whose pivot lies beyond that block span the intersection.
    """
    n, d = gamma.n, gamma.field.degree
    l3 = n - l2
    order = list(range(l2, n)) + list(range(l2))
    rows = [[int(q * gamma.denom) for q in _flatten(b, order)] for b in gamma.basis]
    h = _hnf.hnf(rows)
    cap, rest = [], []
    for row, p in zip(h, _hnf.pivot_columns(h)):
        vec = _unflatten(gamma.field, [Fraction(v, gamma.denom) for v in row], n, order)
        (cap if p >= d * l3 else rest).append(vec)
    return cap, rest


@dataclass(frozen=True)
class Invariants:
    rank: int
    rank_cap_V2: int
    rank_proj3: int

    def items(self):
        return [("rank", self.rank), ("rank_cap_V2", self.rank_cap_V2),
                ("rank_proj3", self.rank_proj3)]


def gamma_invariants(gamma: GammaGroup, l2: int) -> Invariants:
    """Orbit invariants under G(l2, l3): rank, rank of Gamma cap V2, rank of the V3 projection."""
    cap, _ = _split_basis(gamma, l2)
    proj = [_flatten(b[l2:]) for b in gamma.basis]
    denom = _lcm_denominators(proj)
    proj_rank = len(_hnf.hnf([[int(q * denom) for q in row] for row in proj]))
    return Invariants(gamma.rank, len(cap), proj_rank)


def verify_witness(g: BlockMatrix, gamma: GammaGroup, gamma2: GammaGroup) -> bool:
    """True iff g(gamma) == gamma2 as sets."""
    if g.l2 + g.l3 != gamma.n or gamma.n != gamma2.n:
        return False
    image = gamma_apply(g, gamma)
    return image.contains(gamma2) and gamma2.contains(image)


@dataclass(frozen=True)
class Equivalent:
    witness: BlockMatrix

    def __str__(self):
        return f"EQUIVALENT g={self.witness}"


@dataclass(frozen=True)
class Inequivalent:
    invariant: str
    lhs: object
    rhs: object

    def __str__(self):
        return f"INEQUIVALENT invariant={self.invariant} lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class Undecided:
    radius: int

    def __str__(self):
        return f"UNDECIDED radius={self.radius}"


def _adapted_matrix(gamma, l2):
    cap, rest = _split_basis(gamma, l2)
    return [list(v) for v in cap + rest]


def _shells(k, radius):
    """Integer vectors in [-radius, radius]^k, by increasing max-norm."""
    yield (0,) * k
    for s in range(1, radius + 1):
        for vec in itertools.product(range(-s, s + 1), repeat=k):
            if max(map(abs, vec)) == s:
                yield vec


def decide_equivalence(gamma: GammaGroup, gamma2: GammaGroup, l2: int, radius: int,
                       max_candidates: int = 200_000):
    """Decide whether some g in G(l2, l3) maps gamma onto gamma2.

    Invariant mismatches give a certified Inequivalent.  Over Q every pair
    of full lattices is equivalent and a witness is built directly.  Other
    cases fall back to a bounded search over integer change-of-basis
    matrices; exhausting it yields Undecided, never a guess.
    """
    if gamma.field != gamma2.field or gamma.n != gamma2.n:
        raise ShapeMismatch("subgroups live in different ambient spaces")
    if not 0 <= l2 <= gamma.n:
        raise ShapeMismatch(f"l2={l2} out of range for n={gamma.n}")
    field, n = gamma.field, gamma.n
    l3 = n - l2
    inv1, inv2 = gamma_invariants(gamma, l2), gamma_invariants(gamma2, l2)
    for (name, a), (_, b) in zip(inv1.items(), inv2.items()):
        if a != b:
            return Inequivalent(name, a, b)
    if gamma.contains(gamma2) and gamma2.contains(gamma):
        return Equivalent(BlockMatrix.identity(field, l2, l3))
    if gamma.rank == n and inv1.rank_cap_V2 == l2:
        # adapted bases P, P' are block lower triangular; g = P'^{-1} P
        P = _adapted_matrix(gamma, l2)
        P2 = _adapted_matrix(gamma2, l2)
        g = BlockMatrix.from_full(field, linalg.matmul(linalg.inverse(P2, field), P, field), l2)
        if not verify_witness(g, gamma, gamma2):
            raise AssertionError("adapted-basis witness failed verification")
        return Equivalent(g)
    return _search_equivalence(gamma, gamma2, l2, radius, max_candidates)


def _search_equivalence(gamma, gamma2, l2, radius, max_candidates):
    field, n, m = gamma.field, gamma.n, gamma.rank
    M = [list(b) for b in gamma.basis]
    M2 = [list(b) for b in gamma2.basis]
    S = linalg.independent_rows(M)
    MS_inv = linalg.inverse([M[i] for i in S], field)
    R = linalg.matmul(M, MS_inv, field)

    def constraints(U):
        # Y = U M2 must satisfy the F-relations of M, and g^{-1} = MS^{-1} Y_S
        # must have a vanishing top-right block.
        Y = linalg.matmul(U, M2, field)
        YS = [Y[i] for i in S]
        rel = linalg.matmul(R, YS, field)
        ginv = linalg.matmul(MS_inv, YS, field)
        out = []
        for i in range(m):
            for j in range(n):
                out.extend((rel[i][j] - Y[i][j]).coords)
        for i in range(l2):
            for j in range(l2, n):
                out.extend(ginv[i][j].coords)
        return out

    cols = []
    for a in range(m):
        for b in range(m):
            U = [[field.zero] * m for _ in range(m)]
            U[a][b] = field.one
            cols.append(constraints(U))
    denom = _lcm_denominators(cols)
    nrows = len(cols[0]) if cols else 0
    mat = [[int(cols[j][i] * denom) for j in range(m * m)] for i in range(nrows)]
    kern = _hnf.kernel(mat, m * m)
    tried = 0
    for coeffs in _shells(len(kern), radius):
        tried += 1
        if tried > max_candidates:
            break
        flat = [sum(c * v[k] for c, v in zip(coeffs, kern)) for k in range(m * m)]
        U = [flat[r * m:(r + 1) * m] for r in range(m)]
        if abs(_hnf.int_det(U)) != 1:
            continue
        Uf = [[field(x) for x in row] for row in U]
        YS = [linalg.matmul(Uf, M2, field)[i] for i in S]
        ginv = linalg.matmul(MS_inv, YS, field)
        try:
            g = BlockMatrix.from_full(field, linalg.inverse(ginv, field), l2)
        except (SingularBlock, ShapeMismatch):
            continue
        if verify_witness(g, gamma, gamma2):
            return Equivalent(g)
    return Undecided(radius)
