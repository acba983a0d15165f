"""Explicit isomorphisms W(l1, l2, l3, Gamma) -> W(l1, l2, l3, Gamma') from a witness g.

For ``g = [[A, 0], [B, C]]`` with ``Gamma g^{-1} = Gamma'`` the map is fixed on
generators:

* ``x^alpha -> x'^{alpha g^{-1}}``;
* ``d_p -> d'_p`` for p <= l1, and ``d_{l1+j} -> sum_k g[k][j] d'_{l1+k}``;
* ``t_q -> t'_q`` for q <= l1, and ``t_{l1+j} -> sum_k (A^t)^{-1}[k][j] t'_{l1+k}``;

and extended multiplicatively.  The zero top-right block of g is exactly
what makes the images of the d's act on the images of the t's as the
identity matrix.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import Monomial, Signature, WeylElement, act_on_A, bracket, derive, op_mul
from .errors import GeneratorCheckFailed, SignatureMismatch, TupleMismatch, WitnessInvalid
from .hnf import int_det
from .lattice import BlockMatrix, Equivalent, Inequivalent, decide_equivalence, verify_witness

__all__ = ["SigmaMap", "build_sigma", "apply_sigma", "verify_sigma", "SigmaReport",
           "decide_isomorphism", "Isomorphic", "NotIsomorphic", "UndecidedIso", "compose_sigma"]


@dataclass(frozen=True)
class SigmaMap:
    source: Signature
    target: Signature
    g: BlockMatrix
    tau: tuple          # row k: target Gamma-coordinates of the image of source basis vector k
    dbar: tuple         # images of d_1..d_l, as target elements
    t_images: tuple     # images of t_1..t_{l1+l2}, as target elements of A'
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def tau_of(self, alpha) -> tuple:
        m = len(self.tau[0]) if self.tau else 0
        out = [0] * m
        for c, row in zip(alpha, self.tau):
            if c:
                out = [o + c * r for o, r in zip(out, row)]
        return tuple(out)


def _tau_matrix(g, source, target):
    ginv = g.inverse_full()
    F = source.field
    rows = []
    for b in source.gamma.basis:
        image = linalg.vecmat(b, ginv, F) if source.n else []
        coords = target.gamma.member(image)
        if coords is None:
            raise WitnessInvalid(f"image of basis vector {b} is not in the target group")
        rows.append(coords)
    if len(rows) != target.gamma.rank or abs(int_det(rows)) != 1:
        raise WitnessInvalid("g does not map Gamma onto Gamma'")
    return tuple(tuple(r) for r in rows)


def build_sigma(g: BlockMatrix, source: Signature, target: Signature, check: bool = True) -> SigmaMap:
    """Assemble the isomorphism from the witness g and check its defining identities."""
    if source.shape != target.shape:
        raise TupleMismatch(f"{source.shape} != {target.shape}")
    if source.field != target.field:
        raise SignatureMismatch("the two algebras are over different fields")
    if (g.l2, g.l3) != (source.l2, source.l3):
        raise WitnessInvalid("witness has the wrong block shape")
    if not verify_witness(g, source.gamma, target.gamma):
        raise WitnessInvalid("g(Gamma) != Gamma'")
    l1, l2, ell = source.l1, source.l2, source.ell
    full = g.full()
    F = target.field
    tau = _tau_matrix(g, source, target)
    dbar = [target.d(p) for p in range(1, l1 + 1)]
    for j in range(source.n):
        img = target.zero()
        for k in range(source.n):
            if full[k][j]:
                img = img + target.d(l1 + k + 1).scale(full[k][j])
        dbar.append(img)
    t_images = [target.t(q) for q in range(1, l1 + 1)]
    if l2:
        Ainv = linalg.inverse([list(r) for r in g.A], F)
        for j in range(l2):
            img = target.zero()
            for k in range(l2):
                # (A^t)^{-1}[k][j] == A^{-1}[j][k]
                c = Ainv[j][k]
                if c:
                    img = img + target.t(l1 + k + 1).scale(c)
            t_images.append(img)
    sigma = SigmaMap(source, target, g, tau, tuple(dbar), tuple(t_images))
    if check:
        failures = generator_failures(sigma)
        if failures:
            raise GeneratorCheckFailed("; ".join(failures))
    return sigma


def generator_failures(sigma: SigmaMap):
    """Violations of d-images acting on t-images as the identity and on x-images compatibly."""
    src, tgt = sigma.source, sigma.target
    out = []
    for p, dp in enumerate(sigma.dbar, 1):
        for q, tq in enumerate(sigma.t_images, 1):
            got = act_on_A(dp, tq)
            if got != tgt.scalar(1 if p == q else 0):
                out.append(f"sigma(d{p})(sigma(t{q})) = {got}")
        for k in range(src.gamma.rank):
            for s in (1, -1):
                alpha = tuple(s if r == k else 0 for r in range(src.gamma.rank))
                lhs = act_on_A(dp, _x_image(sigma, alpha))
                rhs = apply_sigma(sigma, derive(p, src.x(alpha)))
                if lhs != rhs:
                    out.append(f"sigma(d{p})(sigma(x^{alpha})) = {lhs}, expected {rhs}")
    return out


def _x_image(sigma, alpha):
    return sigma.target.x(sigma.tau_of(alpha))


def _power(sigma, kind, idx, e):
    key = (kind, idx, e)
    cache = sigma._cache
    val = cache.get(key)
    if val is None:
        base = sigma.t_images[idx] if kind == "t" else sigma.dbar[idx]
        val = base if e == 1 else op_mul(_power(sigma, kind, idx, e - 1), base)
        cache[key] = val
    return val


def _monomial_image(sigma, mono):
    cache = sigma._cache
    val = cache.get(mono)
    if val is None:
        val = _x_image(sigma, mono.alpha)
        for q, e in enumerate(mono.i):
            if e:
                val = op_mul(val, _power(sigma, "t", q, e))
        for p, e in enumerate(mono.mu):
            if e:
                val = op_mul(val, _power(sigma, "d", p, e))
        cache[mono] = val
    return val


def apply_sigma(sigma: SigmaMap, u: WeylElement) -> WeylElement:
    """Image of u: each monomial goes to sigma(x^alpha) prod sigma(t_q)^i_q prod sigma(d_p)^mu_p."""
    if u.sig != sigma.source:
        raise SignatureMismatch("element does not belong to the source algebra")
    out = {}
    for mono, c in u.terms.items():
        for k, v in _monomial_image(sigma, mono).terms.items():
            s = out.get(k)
            out[k] = v * c if s is None else s + v * c
    return WeylElement(sigma.target, out)


@dataclass
class SigmaReport:
    checks: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.passed:
            return f"sigma verified: {self.checks} checks passed"
        return f"sigma FAILED {len(self.failures)} of {self.checks} checks; first: {self.failures[0]}"


def verify_sigma(sigma: SigmaMap, trials: int = 100, seed: int = 0xC0FFEE,
                 degree_cap: int = 3, alpha_cap: int = 2) -> SigmaReport:
    """Check multiplicativity and bracket compatibility on generators and random pairs.

    Also spot-checks the splitting of the l1-block: the image of
    x^{alpha,i+j} d^mu (i on the l2 block, j and mu on the l1 block) is the
    image of x^{alpha,i} times powers of the images of t_p and d_p.
    """
    from .sampling import random_element, random_monomial

    src = sigma.source
    rng = random.Random(seed)
    report = SigmaReport()

    def check(u, v):
        su, sv = apply_sigma(sigma, u), apply_sigma(sigma, v)
        report.checks += 2
        if apply_sigma(sigma, op_mul(u, v)) != op_mul(su, sv):
            report.failures.append(f"sigma({u} * {v}) != sigma({u}) * sigma({v})")
        if apply_sigma(sigma, bracket(u, v)) != bracket(su, sv):
            report.failures.append(f"sigma([{u}, {v}]) != [sigma({u}), sigma({v})]")

    for f in generator_failures(sigma):
        report.checks += 1
        report.failures.append(f)
    gens = [g for _, g in src.generators()]
    for u in gens:
        for v in gens:
            check(u, v)
    for _ in range(trials):
        u = random_element(src, rng, terms=2, degree_cap=degree_cap, alpha_cap=alpha_cap)
        v = random_element(src, rng, terms=2, degree_cap=degree_cap, alpha_cap=alpha_cap)
        check(u, v)
        _check_split(sigma, rng, report, degree_cap, alpha_cap)
    return report


def _check_split(sigma, rng, report, degree_cap, alpha_cap):
    from .sampling import random_monomial

    src = sigma.source
    l1, l2, ell = src.l1, src.l2, src.ell
    mono = random_monomial(src, rng, degree_cap=degree_cap, alpha_cap=alpha_cap)
    i = tuple(0 if q < l1 else e for q, e in enumerate(mono.i))
    j = tuple(e if q < l1 else 0 for q, e in enumerate(mono.i))
    mu = tuple(e if p < l1 else 0 for p, e in enumerate(mono.mu))
    zero = (0,) * ell
    lhs = apply_sigma(sigma, src.element({Monomial(mono.alpha, mono.i, mu): src.field.one}))
    rhs = apply_sigma(sigma, src.element({Monomial(mono.alpha, i, zero): src.field.one}))
    for p in range(l1):
        for _ in range(j[p]):
            rhs = op_mul(rhs, sigma.t_images[p])
    for p in range(l1):
        for _ in range(mu[p]):
            rhs = op_mul(rhs, sigma.dbar[p])
    report.checks += 1
    if lhs != rhs:
        report.failures.append(f"l1-block splitting fails on alpha={mono.alpha}, i={mono.i}, mu={mu}")


def compose_sigma(second: SigmaMap, first: SigmaMap) -> SigmaMap:
    """The map built from the product witness; agrees with second o first."""
    if first.target != second.source:
        raise SignatureMismatch("maps are not composable")
    return build_sigma(second.g @ first.g, first.source, second.target)


@dataclass(frozen=True)
class Isomorphic:
    sigma: SigmaMap
    report: SigmaReport

    def __str__(self):
        return f"EQUIVALENT g={self.sigma.g}"


@dataclass(frozen=True)
class NotIsomorphic:
    invariant: str
    lhs: object
    rhs: object

    def __str__(self):
        return f"INEQUIVALENT invariant={self.invariant} lhs={self.lhs} rhs={self.rhs}"


@dataclass(frozen=True)
class UndecidedIso:
    radius: int

    def __str__(self):
        return f"UNDECIDED radius={self.radius}"


def _fmt_shape(shape):
    return "(" + ",".join(map(str, shape)) + ")"


def decide_isomorphism(sigA: Signature, sigB: Signature, radius: int = 3, trials: int = 20,
                       seed: int = 0xC0FFEE):
    """Isomorphic (with a verified map), NotIsomorphic (with a certificate) or Undecided."""
    if sigA.shape != sigB.shape:
        return NotIsomorphic("tuple", _fmt_shape(sigA.shape), _fmt_shape(sigB.shape))
    if sigA.field != sigB.field:
        raise SignatureMismatch("the two algebras are over different fields")
    verdict = decide_equivalence(sigA.gamma, sigB.gamma, sigA.l2, radius)
    if isinstance(verdict, Inequivalent):
        return NotIsomorphic(verdict.invariant, verdict.lhs, verdict.rhs)
    if isinstance(verdict, Equivalent):
        sigma = build_sigma(verdict.witness, sigA, sigB)
        return Isomorphic(sigma, verify_sigma(sigma, trials=trials, seed=seed))
    return UndecidedIso(verdict.radius)
