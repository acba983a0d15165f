"""Seeded random generators for elements, witnesses and subgroups.

Everything takes an explicit ``random.Random`` so that runs are
reproducible from a single seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .algebra import Monomial, Signature, WeylElement
from .errors import DegenerateGroup, SingularBlock
from .lattice import BlockMatrix, GammaGroup, gamma_apply, gamma_make
from .numberfield import FieldElement, NumberField

__all__ = [
    "random_scalar", "random_field_element", "random_alpha", "random_monomial", "random_element",
    "random_A_monomials", "random_block_matrix", "random_unimodular", "random_gamma",
    "random_integer_lattice", "equivalent_pair",
]


def random_scalar(rng: random.Random, bound: int = 3) -> Fraction:
    """A small nonzero rational."""
    while True:
        num = rng.randint(-bound, bound)
        if num:
            return Fraction(num, rng.randint(1, 2))


def random_field_element(field: NumberField, rng: random.Random, bound: int = 3) -> FieldElement:
    while True:
        coords = [Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(field.degree)]
        if any(coords):
            return field.from_coords(coords)


def random_alpha(sig: Signature, rng: random.Random, alpha_cap: int = 6) -> tuple:
    """Gamma-coordinates with l1-norm at most alpha_cap."""
    r = sig.gamma.rank
    out = [0] * r
    if not r:
        return ()
    for _ in range(rng.randint(0, alpha_cap)):
        out[rng.randrange(r)] += rng.choice((1, -1))
    return tuple(out)


def _random_exponents(rng, axes, length, budget):
    out = [0] * length
    if not axes:
        return tuple(out)
    for _ in range(rng.randint(0, budget)):
        out[rng.choice(axes)] += 1
    return tuple(out)


def random_monomial(sig: Signature, rng: random.Random, degree_cap: int = 8, alpha_cap: int = 6) -> Monomial:
    """A random index (alpha, i, mu) whose t-degree and d-degree are each at most degree_cap."""
    t_axes = list(range(sig.l1 + sig.l2))
    d_axes = list(range(sig.ell))
    i = _random_exponents(rng, t_axes, sig.ell, degree_cap)
    mu = _random_exponents(rng, d_axes, sig.ell, degree_cap)
    return Monomial(random_alpha(sig, rng, alpha_cap), i, mu)


def random_element(sig: Signature, rng: random.Random, terms: int = 3, degree_cap: int = 8,
                   alpha_cap: int = 6, A_only: bool = False) -> WeylElement:
    """A nonzero element with up to ``terms`` monomials."""
    while True:
        out = {}
        for _ in range(rng.randint(1, terms)):
            m = random_monomial(sig, rng, degree_cap, alpha_cap)
            if A_only:
                m = m._replace(mu=(0,) * sig.ell)
            out[m] = random_field_element(sig.field, rng, bound=2)
        u = sig.element(out)
        if u:
            return u


def random_A_monomials(sig: Signature, degree: int, alpha_cap: int = 1):
    """Every A-monomial x^alpha t^i with total t-degree <= degree and |alpha|_inf <= alpha_cap."""
    from itertools import product

    t_axes = sig.l1 + sig.l2
    alphas = list(product(range(-alpha_cap, alpha_cap + 1), repeat=sig.gamma.rank))
    out = []
    for i in product(range(degree + 1), repeat=t_axes):
        if sum(i) > degree:
            continue
        for a in alphas:
            out.append(sig.monomial(alpha=a, i=tuple(i) + (0,) * sig.l3))
    return out


def random_unimodular(rng: random.Random, k: int, steps: int = 6):
    """An integer matrix with determinant +-1, built from elementary moves."""
    m = [[int(r == c) for c in range(k)] for r in range(k)]
    if k == 0:
        return m
    for _ in range(steps):
        a, b = rng.randrange(k), rng.randrange(k)
        if a != b:
            c = rng.choice((-2, -1, 1, 2))
            m[a] = [x + c * y for x, y in zip(m[a], m[b])]
    if rng.random() < 0.5:
        m[0] = [-x for x in m[0]]
    if k > 1 and rng.random() < 0.5:
        a, b = rng.sample(range(k), 2)
        m[a], m[b] = m[b], m[a]
    return m


def random_block_matrix(field: NumberField, l2: int, l3: int, rng: random.Random, bound: int = 2) -> BlockMatrix:
    """A random invertible ``[[A, 0], [B, C]]`` with small entries."""
    def square(k):
        while True:
            m = [[random_field_element(field, rng, bound) if rng.random() < 0.7 else field.zero
                  for _ in range(k)] for _ in range(k)]
            if k == 0 or linalg.det(m, field):
                return m

    while True:
        A, C = square(l2), square(l3)
        B = [[random_field_element(field, rng, bound) if rng.random() < 0.5 else field.zero
              for _ in range(l2)] for _ in range(l3)]
        try:
            return BlockMatrix.make(field, A, B, C)
        except SingularBlock:
            continue


def random_gamma(field: NumberField, n: int, rng: random.Random, extra: int = 1, bound: int = 3) -> GammaGroup:
    """A random nondegenerate subgroup of F^n with n + extra generators (so rank may exceed n)."""
    while True:
        gens = [[random_field_element(field, rng, bound) if rng.random() < 0.8 else field.zero
                 for _ in range(n)] for _ in range(n + extra)]
        try:
            return gamma_make(field, n, gens)
        except DegenerateGroup:
            continue


def random_integer_lattice(n: int, rng: random.Random, bound: int = 4) -> GammaGroup:
    """A random full-rank sublattice of Z^n inside Q^n."""
    from .numberfield import QQ

    while True:
        gens = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if linalg.det([[QQ(x) for x in r] for r in gens], QQ):
            return gamma_make(QQ, n, gens)


def equivalent_pair(gamma: GammaGroup, l2: int, rng: random.Random):
    """A random witness g and the image group; the pair (gamma, image) is equivalent by construction."""
    g = random_block_matrix(gamma.field, l2, gamma.n - l2, rng)
    return g, gamma_apply(g, gamma)
