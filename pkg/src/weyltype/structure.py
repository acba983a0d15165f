"""ad-operators, local finiteness/nilpotency classification, and a simplicity probe.

The locally finite elements F and locally nilpotent elements N are only
known up to the sandwiches ``A + D <= F <= A[D1] + D`` and
``A + D1 <= N <= A[D1]``.  The membership tests used here are syntactic
(which t- and d-axes a term uses), so every verdict is certified; the gaps
between the bounds are reported as such rather than guessed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import Signature, WeylElement, bracket, op_mul
from .errors import InvariantViolation, ScalarInput, ZeroElement

__all__ = [
    "Verdict", "LocalClass", "ad_power", "classify_local", "NilpotentAt", "SpanDim", "ad_growth",
    "nilpotency_bound",
    "is_in_E_of_F", "is_in_N_of_N", "centralizer_check", "ReachedOne", "Exhausted",
    "simplicity_probe", "in_A_plus_D1", "in_A_plus_D", "in_A_D1", "in_A_D1_plus_D",
]


def ad_power(u: WeylElement, v: WeylElement, s: int) -> WeylElement:
    """(ad u)^s v."""
    for _ in range(s):
        if not v:
            break
        v = bracket(u, v)
    return v


# --- syntactic membership ------------------------------------------------------

def _is_pure_derivation(sig, mono):
    return not any(mono.alpha) and not any(mono.i) and sum(mono.mu) == 1


def _mu_in_D1(sig, mono):
    return not any(mono.mu[sig.l1:])


def in_A_plus_D1(u: WeylElement) -> bool:
    sig = u.sig
    return all(not any(m.mu) or (_is_pure_derivation(sig, m) and _mu_in_D1(sig, m)) for m in u.terms)


def in_A_plus_D(u: WeylElement) -> bool:
    return all(not any(m.mu) or _is_pure_derivation(u.sig, m) for m in u.terms)


def in_A_D1(u: WeylElement) -> bool:
    return all(_mu_in_D1(u.sig, m) for m in u.terms)


def in_A_D1_plus_D(u: WeylElement) -> bool:
    sig = u.sig
    return all(_mu_in_D1(sig, m) or _is_pure_derivation(sig, m) for m in u.terms)


class Verdict(enum.Enum):
    CertNilpotent = "CertNilpotent"
    CertFiniteNotNilpotent = "CertFiniteNotNilpotent"
    NotLocallyFinite = "NotLocallyFinite"
    NotNilpotentUnknownFinite = "NotNilpotentUnknownFinite"
    Inconclusive = "Inconclusive"


@dataclass(frozen=True)
class LocalClass:
    verdict: Verdict
    reason: str

    def __str__(self):
        return f"{self.verdict.value} ({self.reason})"


def classify_local(u: WeylElement) -> LocalClass:
    if not u:
        raise ZeroElement("the zero element is not classified")
    if in_A_plus_D1(u):
        return LocalClass(Verdict.CertNilpotent, "A+D1 ⊂ N")
    if not in_A_D1_plus_D(u):
        return LocalClass(Verdict.NotLocallyFinite, "F ⊂ A[D1]+D")
    if in_A_plus_D(u):
        return LocalClass(Verdict.CertFiniteNotNilpotent, "A+D ⊂ F, N ⊂ A[D1]")
    if not in_A_D1(u):
        return LocalClass(Verdict.NotNilpotentUnknownFinite, "N ⊂ A[D1]; A+D ⊂ F ⊂ A[D1]+D undecided")
    return LocalClass(Verdict.Inconclusive, "A+D1 ⊂ N ⊂ A[D1] and A+D ⊂ F ⊂ A[D1]+D undecided")


# --- exact spans -------------------------------------------------------------------

def _order_key(mono):
    # the unit monomial is the unique minimum
    return (sum(mono.i) + sum(mono.mu), sum(map(abs, mono.alpha)), mono.alpha, mono.i, mono.mu)


class _Span:
    """Incremental echelon basis of a subspace of W, optionally tracking provenance."""

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, terms, prov=None):
        terms = dict(terms)
        prov = dict(prov or {})
        while terms:
            lead = max(terms, key=_order_key)
            row = self.rows.get(lead)
            if row is None:
                return lead, terms, prov
            c = terms[lead]
            rterms, rprov = row
            for k, v in rterms.items():
                s = terms.get(k)
                s = -c * v if s is None else s - c * v
                if s:
                    terms[k] = s
                else:
                    terms.pop(k, None)
            for k, v in rprov.items():
                prov[k] = prov.get(k, 0) - c * v
        return None, terms, prov

    def insert(self, terms, prov=None) -> bool:
        lead, terms, prov = self.reduce(terms, prov)
        if lead is None:
            return False
        inv = 1 / terms[lead]
        self.rows[lead] = ({k: v * inv for k, v in terms.items()},
                           {k: v * inv for k, v in prov.items()})
        return True


@dataclass(frozen=True)
class NilpotentAt:
    k: int

    def __str__(self):
        return f"NilpotentAt({self.k})"


@dataclass(frozen=True)
class SpanDim:
    dims: tuple

    @property
    def stabilized(self) -> bool:
        """The span is ad u-stable once a step adds nothing new; this certifies finiteness on v."""
        return len(self.dims) >= 2 and self.dims[-1] == self.dims[-2]

    def __str__(self):
        return "SpanDim(" + ",".join(map(str, self.dims)) + ")"


def ad_growth(u: WeylElement, v: WeylElement, S: int):
    """Dimensions of span{(ad u)^s v : s <= S}, or the first k with (ad u)^k v = 0."""
    span = _Span()
    dims = []
    w = v
    for s in range(S + 1):
        if not w:
            return NilpotentAt(s)
        span.insert(w.terms)
        dims.append(len(span))
        if s < S:
            w = bracket(u, w)
    return SpanDim(tuple(dims))


def nilpotency_bound(u: WeylElement, v: WeylElement) -> int:
    """An upper bound for the first k with (ad u)^k v = 0, valid for u in A + D1.

    Write u = a + d.  Let e be the largest t-degree of a on the first l1
    axes, and put phi = (e + 1) * |mu| + (t-degree on the first l1 axes) for a
    term of v.  ad a lowers |mu| by at least one and raises that t-degree by
    at most e; ad d lowers the t-degree by one.  Either way phi drops, so
    (ad u)^k v vanishes once k exceeds the largest phi over the terms of v.
    """
    if not in_A_plus_D1(u):
        raise ValueError("the bound only applies to u in A + D1")
    l1 = u.sig.l1
    e = max((sum(m.i[:l1]) for m in u.terms if not any(m.mu)), default=0)
    phi = max(((e + 1) * sum(m.mu) + sum(m.i[:l1]) for m in v.terms), default=-1)
    return phi + 1


# --- eigenvectors and centralizers -------------------------------------------------

def _eigen_for(v, u):
    w = bracket(v, u)
    if not w:
        return True
    lead, c = next(iter(u.terms.items()))
    ratio = w.terms.get(lead)
    if ratio is None:
        return False
    return w == u.scale(ratio / c)


def _sample_A_plus_D(sig: Signature, d1_only: bool):
    out = []
    for label, g in sig.generators():
        if label.startswith("d") and d1_only and int(label[1:]) > sig.l1:
            continue
        out.append(g)
    return out


def is_in_E_of_F(u: WeylElement, check: bool = True) -> bool:
    """Whether u is a simultaneous ad-eigenvector for F, i.e. u = c x^alpha.

    With ``check`` the eigenvector property is confirmed on the generators of
    A + D whenever the closed form says yes.
    """
    if not u:
        raise ZeroElement("the zero element is excluded")
    answer = len(u.terms) == 1 and all(not any(m.i) and not any(m.mu) for m in u.terms)
    if answer and check:
        for v in _sample_A_plus_D(u.sig, d1_only=False):
            if not _eigen_for(v, u):
                raise InvariantViolation(f"{u} fails the eigenvector property against {v}")
    return answer


def is_in_N_of_N(u: WeylElement, check: bool = True) -> bool:
    """Whether u commutes with N, i.e. u lies in the span of x^{alpha,i} with i supported on the l2 block."""
    if not u:
        raise ZeroElement("the zero element is excluded")
    l1 = u.sig.l1
    answer = all(not any(m.mu) and not any(m.i[:l1]) for m in u.terms)
    if answer and check:
        for v in _sample_A_plus_D(u.sig, d1_only=True):
            if bracket(v, u):
                raise InvariantViolation(f"{u} does not commute with {v}")
    return answer


def centralizer_check(u: WeylElement, gens) -> bool:
    """True iff u commutes with every element of ``gens``."""
    return all(not bracket(u, g) for g in gens)


# --- simplicity probe ----------------------------------------------------------------

@dataclass(frozen=True)
class ReachedOne:
    rounds: int
    steps: tuple
    combination: tuple

    def __str__(self):
        combo = " + ".join(f"({c})*[{k}]" for k, c in self.combination)
        return f"ReachedOne(rounds={self.rounds}): 1 = {combo}"


@dataclass(frozen=True)
class Exhausted:
    rounds: int
    dimension: int

    def __str__(self):
        return f"Exhausted(rounds={self.rounds}, dim={self.dimension})"


def _within_caps(w, degree_cap, alpha_cap):
    return all(sum(m.i) + sum(m.mu) <= degree_cap and sum(map(abs, m.alpha)) <= alpha_cap
               for m in w.terms)


def simplicity_probe(u: WeylElement, steps: int = 6, degree_cap: int = 8, alpha_cap: int = 4):
    """Grow the two-sided ideal generated by u until it contains 1 or the rounds run out.

    Each round multiplies the newest ideal elements on both sides by the
    algebra generators; products leaving the degree caps are dropped.  The
    trace lists how every element was obtained and the final combination.
    """
    if not u:
        raise ZeroElement("the zero element generates the zero ideal")
    if u.is_scalar():
        raise ScalarInput("a nonzero scalar already is a unit")
    sig = u.sig
    one_key = sig._one_key
    gens = sig.generators()
    span = _Span()
    steps_log = ["[0] = u"]
    span.insert(u.terms, {0: sig.field.one})
    frontier = [0]
    elements = [u]

    def found(rounds):
        _, prov = span.rows[one_key]
        combo = tuple(sorted((k, v) for k, v in prov.items() if v))
        return ReachedOne(rounds, tuple(steps_log), combo)

    rounds = 0
    while frontier and rounds < steps:
        rounds += 1
        nxt = []
        for idx in frontier:
            e = elements[idx]
            for label, g in gens:
                for w, desc in ((op_mul(g, e), f"{label}*[{idx}]"), (op_mul(e, g), f"[{idx}]*{label}")):
                    if not w or not _within_caps(w, degree_cap, alpha_cap):
                        continue
                    k = len(elements)
                    if span.insert(w.terms, {k: sig.field.one}):
                        elements.append(w)
                        steps_log.append(f"[{k}] = {desc}")
                        nxt.append(k)
                        if one_key in span.rows:
                            return found(rounds)
        frontier = nxt
    return Exhausted(rounds, len(span))
