"""The algebra W(l1, l2, l3, Gamma) = A (x) F[D].

A basis monomial ``x^{alpha,i} d^mu`` is stored as a triple of integer
tuples: ``alpha`` in coordinates of Gamma's canonical basis, ``i`` of length
``l`` with zeros in the last ``l3`` slots, and ``mu`` of length ``l``.
Axes are 1-based in the public helpers (``t(q)``, ``d(p)``, ``derive(p, a)``)
and 0-based internally.
"""

from __future__ import annotations

from math import comb, prod
from itertools import product as _cartesian
from typing import NamedTuple

from .errors import AxisOutOfRange, ShapeMismatch, SignatureMismatch
from .lattice import GammaGroup, gamma_make
from .numberfield import FieldElement, NumberField

__all__ = [
    "Signature", "Monomial", "WeylElement", "semigroup_mul", "derive", "multi_binom",
    "op_mul", "bracket", "act_on_A", "compare_index", "index_key",
]


class Signature:
    """The data (l1, l2, l3, Gamma) fixing one algebra."""

    def __init__(self, l1: int, l2: int, l3: int, gamma: GammaGroup):
        if min(l1, l2, l3) < 0 or l1 + l2 + l3 == 0:
            raise ShapeMismatch("need nonnegative l1, l2, l3 with positive sum")
        if gamma.n != l2 + l3:
            raise ShapeMismatch(f"Gamma lives in F^{gamma.n}, expected F^{l2 + l3}")
        self.l1, self.l2, self.l3 = l1, l2, l3
        self.gamma = gamma
        self.field: NumberField = gamma.field
        self.ell = l1 + l2 + l3
        self.n = l2 + l3
        self._axes_cache = {}
        self._one_key = Monomial((0,) * gamma.rank, (0,) * self.ell, (0,) * self.ell)

    @classmethod
    def build(cls, l1, l2, l3, field, generators=()):
        return cls(l1, l2, l3, gamma_make(field, l2 + l3, generators))

    @property
    def shape(self):
        return (self.l1, self.l2, self.l3)

    def __eq__(self, other):
        if not isinstance(other, Signature):
            return NotImplemented
        return self is other or (self.shape == other.shape and self.gamma == other.gamma)

    def __hash__(self):
        return hash((self.shape, self.gamma))

    def __repr__(self):
        return f"W{self.shape} over {self.field!r}, {self.gamma!r}"

    def alpha_axes(self, alpha) -> tuple:
        """The vector (alpha_1, ..., alpha_l) with zeros on the first l1 axes."""
        vec = self._axes_cache.get(alpha)
        if vec is None:
            vec = (self.field.zero,) * self.l1 + self.gamma.embed(alpha)
            self._axes_cache[alpha] = vec
        return vec

    # --- generators ---------------------------------------------------------

    def element(self, terms) -> WeylElement:
        return WeylElement(self, terms)

    def zero(self) -> WeylElement:
        return WeylElement(self, {})

    def scalar(self, c) -> WeylElement:
        c = self.field(c)
        return WeylElement(self, {self._one_key: c} if c else {})

    def one(self) -> WeylElement:
        return self.scalar(1)

    def monomial(self, alpha=None, i=None, mu=None, coeff=1) -> WeylElement:
        alpha = tuple(alpha) if alpha is not None else (0,) * self.gamma.rank
        i = tuple(i) if i is not None else (0,) * self.ell
        mu = tuple(mu) if mu is not None else (0,) * self.ell
        if len(alpha) != self.gamma.rank or len(i) != self.ell or len(mu) != self.ell:
            raise ShapeMismatch("monomial index of the wrong length")
        if any(i[self.l1 + self.l2:]) or min(i + mu, default=0) < 0:
            raise ShapeMismatch("t-exponents must be natural and vanish on the last l3 axes")
        c = self.field(coeff)
        return WeylElement(self, {Monomial(alpha, i, mu): c} if c else {})

    def x(self, alpha) -> WeylElement:
        """x^alpha for alpha given by Gamma-coordinates."""
        return self.monomial(alpha=alpha)

    def t(self, q: int) -> WeylElement:
        if not 1 <= q <= self.l1 + self.l2:
            raise AxisOutOfRange(f"t{q} does not exist; t-axes are 1..{self.l1 + self.l2}")
        i = [0] * self.ell
        i[q - 1] = 1
        return self.monomial(i=i)

    def d(self, p: int) -> WeylElement:
        if not 1 <= p <= self.ell:
            raise AxisOutOfRange(f"d{p} does not exist; axes are 1..{self.ell}")
        mu = [0] * self.ell
        mu[p - 1] = 1
        return self.monomial(mu=mu)

    def generators(self):
        """x^{+-b} for the Gamma basis b, all t_q and all d_p, as (label, element) pairs."""
        out = []
        for k in range(self.gamma.rank):
            for s in (1, -1):
                a = [0] * self.gamma.rank
                a[k] = s
                out.append((("x+" if s > 0 else "x-") + str(k + 1), self.x(a)))
        out += [(f"t{q}", self.t(q)) for q in range(1, self.l1 + self.l2 + 1)]
        out += [(f"d{p}", self.d(p)) for p in range(1, self.ell + 1)]
        return out


class Monomial(NamedTuple):
    alpha: tuple
    i: tuple
    mu: tuple


def index_key(mu):
    """Sort key realizing the total order on multi-indices: level, then lexicographic."""
    return (sum(mu), tuple(mu))


def compare_index(mu, nu) -> int:
    """-1, 0 or 1 as mu <, =, > nu in the level-then-lexicographic order."""
    if len(mu) != len(nu):
        raise ShapeMismatch("multi-indices of different lengths")
    a, b = index_key(mu), index_key(nu)
    return (a > b) - (a < b)


def multi_binom(mu, lam) -> int:
    """Product of the axis-wise binomial coefficients; 0 unless lam <= mu."""
    return prod(comb(m, k) if 0 <= k <= m else 0 for m, k in zip(mu, lam))


def _print_key(mono):
    return (mono.alpha, index_key(mono.i), index_key(mono.mu))


class WeylElement:
    """A finite F-linear combination of basis monomials.  Treat as immutable."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: Signature, terms):
        self.sig = sig
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, sig, terms):
        obj = object.__new__(cls)
        obj.sig = sig
        obj.terms = terms
        return obj

    def _check(self, other):
        if not isinstance(other, WeylElement):
            return False
        if other.sig is not self.sig and other.sig != self.sig:
            raise SignatureMismatch("elements of different algebras")
        return True

    def __add__(self, other):
        if not isinstance(other, WeylElement):
            other = self.sig.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return WeylElement._raw(self.sig, out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement._raw(self.sig, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeylElement):
            other = self.sig.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> WeylElement:
        c = self.sig.field(c)
        if not c:
            return self.sig.zero()
        return WeylElement._raw(self.sig, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return op_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        result = self.sig.one()
        for _ in range(k):
            result = op_mul(result, self)
        return result

    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self == self.sig.scalar(other)
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(k == self.sig._one_key for k in self.terms)

    def scalar_value(self) -> FieldElement:
        if not self.is_scalar():
            raise ValueError("element is not a scalar")
        return self.terms.get(self.sig._one_key, self.sig.field.zero)

    def in_A(self) -> bool:
        return all(not any(k.mu) for k in self.terms)

    def degree(self) -> int:
        """Largest |i| + |mu| over the terms (-1 for zero)."""
        return max((sum(k.i) + sum(k.mu) for k in self.terms), default=-1)

    def sorted_terms(self):
        """Terms in print order: descending by (alpha, i, mu)."""
        return sorted(self.terms.items(), key=lambda kv: _print_key(kv[0]), reverse=True)

    def __str__(self):
        from .parser import format_element
        return format_element(self)

    def __repr__(self):
        return f"WeylElement({self})"


def _same_sig(u, v):
    if u.sig is not v.sig and u.sig != v.sig:
        raise SignatureMismatch("elements of different algebras")
    return u.sig


def semigroup_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    """Product in the commutative algebra A: exponents add."""
    sig = _same_sig(u, v)
    if not (u.in_A() and v.in_A()):
        raise ValueError("semigroup product is defined on A only")
    out = {}
    zero_mu = (0,) * sig.ell
    for (a, i, _), c1 in u.terms.items():
        for (b, j, _), c2 in v.terms.items():
            key = Monomial(tuple(x + y for x, y in zip(a, b)), tuple(x + y for x, y in zip(i, j)), zero_mu)
            s = out.get(key)
            out[key] = c1 * c2 if s is None else s + c1 * c2
    return WeylElement(sig, out)


def derive(p: int, a: WeylElement) -> WeylElement:
    """Apply the derivation d_p (1-based) to an element of A, one step at a time."""
    sig = a.sig
    if not 1 <= p <= sig.ell:
        raise AxisOutOfRange(f"axis {p} out of range 1..{sig.ell}")
    if not a.in_A():
        raise ValueError("derivations act on A only")
    q = p - 1
    out = {}

    def add(key, c):
        s = out.get(key)
        out[key] = c if s is None else s + c

    for (alpha, i, mu), c in a.terms.items():
        ap = sig.alpha_axes(alpha)[q]
        if ap:
            add(Monomial(alpha, i, mu), c * ap)
        if i[q]:
            lowered = i[:q] + (i[q] - 1,) + i[q + 1:]
            add(Monomial(alpha, lowered, mu), c * i[q])
    return WeylElement(sig, out)


def _axis_options(m, jp, beta_p, powers):
    """Per-axis summands (lam, r, scalar) of the product formula.

    Moving d^m past x^{beta,j} on one axis produces d^lam acting on the
    factor, with d^lam(x^{beta,j}) contributing r t-lowerings and lam - r
    factors of beta_p.
    """
    opts = []
    for lam in range(m + 1):
        cml = comb(m, lam)
        for r in range(min(lam, jp) + 1):
            e = lam - r
            if e and not beta_p:
                continue
            falling = 1
            for k in range(r):
                falling *= jp - k
            coef = cml * comb(lam, r) * falling
            opts.append((lam, r, powers[e] * coef if e else coef))
    return opts


def op_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    """Associative product, extended bilinearly from the monomial rule.

    ``u d^mu . v d^nu = sum_lam C(mu, lam) u d^lam(v) d^{mu+nu-lam}`` with lam
    running over the box lam <= mu.
    """
    sig = _same_sig(u, v)
    ell = sig.ell
    out = {}
    power_cache = {}
    for (b, j, nu), c2 in v.terms.items():
        beta = sig.alpha_axes(b)
        for (a, i, mu), c1 in u.terms.items():
            per_axis = []
            for p in range(ell):
                m = mu[p]
                if m == 0:
                    per_axis.append(((0, 0, 1),))
                    continue
                ck = (b, p, m)
                powers = power_cache.get(ck)
                if powers is None:
                    bp = beta[p]
                    powers = [None]
                    acc = bp
                    for _ in range(m):
                        powers.append(acc)
                        acc = acc * bp
                    power_cache[ck] = powers
                per_axis.append(_axis_options(m, j[p], beta[p], powers))
            c = c1 * c2
            alpha = tuple(x + y for x, y in zip(a, b))
            base_i = tuple(x + y for x, y in zip(i, j))
            base_mu = tuple(x + y for x, y in zip(mu, nu))
            for combo in _cartesian(*per_axis):
                coef = c
                for _, _, s in combo:
                    if s != 1:
                        coef = coef * s
                new_i = tuple(x - o[1] for x, o in zip(base_i, combo))
                new_mu = tuple(x - o[0] for x, o in zip(base_mu, combo))
                key = Monomial(alpha, new_i, new_mu)
                prev = out.get(key)
                out[key] = coef if prev is None else prev + coef
    return WeylElement(sig, out)


def bracket(u: WeylElement, v: WeylElement) -> WeylElement:
    """The commutator ``uv - vu``."""
    return op_mul(u, v) - op_mul(v, u)


def act_on_A(u: WeylElement, a: WeylElement) -> WeylElement:
    """Let u act on A: each term x^{alpha,i} d^mu differentiates then multiplies.

    Built only from single derivation steps and the semigroup product, so it
    serves as an independent check on ``op_mul``.
    """
    sig = _same_sig(u, a)
    if not a.in_A():
        raise ValueError("act_on_A needs an element of A as its second argument")
    result = sig.zero()
    zero_mu = (0,) * sig.ell
    for (alpha, i, mu), c in u.terms.items():
        w = a
        for p, k in enumerate(mu):
            for _ in range(k):
                w = derive(p + 1, w)
        if w:
            mult = WeylElement(sig, {Monomial(alpha, i, zero_mu): c})
            result = result + semigroup_mul(mult, w)
    return result
