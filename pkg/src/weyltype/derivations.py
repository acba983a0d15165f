"""Constant-coefficient derivations, the pairing with Gamma, and dual bases.

A derivation ``sum a_p d_p`` pairs with ``alpha`` through the last
``l2 + l3`` axes only.  Given group elements forming an F-basis of
F^(l2+l3), the dual derivations ``d'_q`` satisfy ``<alpha^(p), d'_q> =
delta_pq``; monomials in the ``d'`` generate F[D] as well, and
``rewrite_in_dual`` / ``rewrite_from_dual`` convert between the two bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from . import linalg
from .algebra import Monomial, Signature, WeylElement
from .errors import NotABasis, ShapeMismatch, SingularBlock

__all__ = ["DerivationVector", "pairing", "DualBasis", "dual_basis", "rewrite_in_dual",
           "rewrite_from_dual"]


@dataclass(frozen=True)
class DerivationVector:
    coeffs: tuple

    @classmethod
    def make(cls, sig: Signature, coeffs):
        coeffs = tuple(sig.field(c) for c in coeffs)
        if len(coeffs) != sig.ell:
            raise ShapeMismatch(f"expected {sig.ell} coefficients")
        return cls(coeffs)

    def element(self, sig: Signature) -> WeylElement:
        out = sig.zero()
        for p, a in enumerate(self.coeffs):
            if a:
                out = out + sig.d(p + 1).scale(a)
        return out


def pairing(sig: Signature, der: DerivationVector, alpha):
    """<der, alpha> = sum over axes p > l1 of a_p alpha_p; alpha in Gamma-coordinates."""
    if len(der.coeffs) != sig.ell:
        raise ShapeMismatch("derivation has the wrong number of axes")
    vec = sig.gamma.embed(tuple(alpha))
    acc = sig.field.zero
    for a, x in zip(der.coeffs[sig.l1:], vec):
        acc = acc + a * x
    return acc


@dataclass(frozen=True)
class DualBasis:
    """``to_partial[q]`` expresses d'_q in the d-basis, ``to_dual[p]`` expresses d_p in the d'-basis."""

    sig: Signature
    chosen: tuple
    to_partial: tuple
    to_dual: tuple


def dual_basis(sig: Signature, chosen) -> DualBasis:
    """Dual derivations to group elements ``chosen`` (Gamma-coordinates)."""
    chosen = tuple(tuple(a) for a in chosen)
    n, l1, F = sig.n, sig.l1, sig.field
    if len(chosen) != n:
        raise NotABasis(f"need {n} elements, got {len(chosen)}")
    M = [list(sig.gamma.embed(a)) for a in chosen]
    try:
        Minv = linalg.inverse(M, F)
    except SingularBlock:
        raise NotABasis("chosen elements are linearly dependent over F") from None
    ell = sig.ell
    to_partial = [[F.one if r == q else F.zero for r in range(ell)] for q in range(l1)]
    to_dual = [[F.one if r == p else F.zero for r in range(ell)] for p in range(l1)]
    for q in range(n):
        to_partial.append([F.zero] * l1 + [Minv[r][q] for r in range(n)])
    for p in range(n):
        to_dual.append([F.zero] * l1 + [M[r][p] for r in range(n)])
    return DualBasis(sig, chosen, tuple(map(tuple, to_partial)), tuple(map(tuple, to_dual)))


def _substitute(terms, matrix, field, ell):
    """Replace each generator e_p by sum_q matrix[p][q] f_q in commutative monomials."""
    out = {}
    cache = {}

    def power(p, k):
        key = (p, k)
        if key not in cache:
            poly = {(0,) * ell: field.one}
            lin = {tuple(1 if r == q else 0 for r in range(ell)): c
                   for q, c in enumerate(matrix[p]) if c}
            for _ in range(k):
                nxt = {}
                for e1, c1 in poly.items():
                    for e2, c2 in lin.items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        nxt[e] = nxt.get(e, field.zero) + c1 * c2
                poly = nxt
            cache[key] = poly
        return cache[key]

    for (alpha, i, mu), c in terms.items():
        poly = {(0,) * ell: c}
        for p, k in enumerate(mu):
            if k:
                nxt = {}
                for e1, c1 in poly.items():
                    for e2, c2 in power(p, k).items():
                        e = tuple(x + y for x, y in zip(e1, e2))
                        nxt[e] = nxt.get(e, field.zero) + c1 * c2
                poly = nxt
        for e, v in poly.items():
            key = Monomial(alpha, i, e)
            out[key] = out.get(key, field.zero) + v
    return {k: v for k, v in out.items() if v}


def rewrite_in_dual(u: WeylElement, db: DualBasis) -> dict:
    """Coefficients of ``u`` on the basis x^{alpha,i} d'^nu, keyed by Monomial(alpha, i, nu)."""
    if u.sig != db.sig:
        raise ShapeMismatch("dual basis built for another algebra")
    return _substitute(u.terms, db.to_dual, u.sig.field, u.sig.ell)


def rewrite_from_dual(form: dict, db: DualBasis) -> WeylElement:
    """Inverse of ``rewrite_in_dual``."""
    sig = db.sig
    return WeylElement(sig, _substitute(form, db.to_partial, sig.field, sig.ell))

