"""Command line front end: ``weyl <command> ...``.

Exit codes: 0 success, 1 parse or usage error, 2 invalid signature,
3 undecided verdict, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import random
import sys

from .algebra import Signature, act_on_A, bracket, op_mul
from .errors import GeneratorCheckFailed, InvariantViolation, ParseError, WeylError
from .iso import Isomorphic, NotIsomorphic, apply_sigma, build_sigma, decide_isomorphism
from .lattice import BlockMatrix, gamma_invariants
from .parser import load_signature, parse_element, parse_matrix
from .structure import (ad_growth, classify_local, is_in_E_of_F, is_in_N_of_N,
                        simplicity_probe)

EXIT_OK, EXIT_USAGE, EXIT_SIGNATURE, EXIT_UNDECIDED, EXIT_INVARIANT = 0, 1, 2, 3, 4
DEFAULT_SEED = 0xC0FFEE


class _UsageError(Exception):
    pass


class _SignatureError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _hex(text):
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hexadecimal seed: {text!r}")


def _signature(path, err) -> Signature:
    try:
        sig = load_signature(path)
    except OSError as exc:
        raise _SignatureError(f"{path}: {exc.strerror or exc}")
    except WeylError as exc:
        raise _SignatureError(f"{path}: {exc}")
    if not sig.field.irreducibility_checked:
        print(f"warning: {path}: irreducibility of the minimal polynomial is unchecked (degree "
              f"{sig.field.degree} > 3)", file=err)
    return sig


def _need_signature(args, err):
    if not args.signature:
        raise _UsageError("this command needs -s/--signature")
    return _signature(args.signature, err)


# --- commands -------------------------------------------------------------------

def cmd_mul(args, out, err):
    sig = _need_signature(args, err)
    acc = parse_element(sig, args.exprs[0])
    for text in args.exprs[1:]:
        acc = op_mul(acc, parse_element(sig, text))
    print(acc, file=out)
    return EXIT_OK


def cmd_bracket(args, out, err):
    sig = _need_signature(args, err)
    u, v = parse_element(sig, args.u), parse_element(sig, args.v)
    print(bracket(u, v), file=out)
    return EXIT_OK


def cmd_ad(args, out, err):
    sig = _need_signature(args, err)
    u, v = parse_element(sig, args.u), parse_element(sig, args.v)
    w = v
    for s in range(args.steps + 1):
        print(f"(ad u)^{s} v = {w}", file=out)
        if not w:
            break
        w = bracket(u, w)
    print(ad_growth(u, v, args.steps), file=out)
    return EXIT_OK


def cmd_analyze(args, out, err):
    sig = _need_signature(args, err)
    u = parse_element(sig, args.u)
    if not u:
        raise _UsageError("cannot analyze the zero element")
    print(f"element: {u}", file=out)
    print(f"local: {classify_local(u)}", file=out)
    print(f"eigenvector of F: {'yes' if is_in_E_of_F(u) else 'no'}", file=out)
    print(f"commutes with N: {'yes' if is_in_N_of_N(u) else 'no'}", file=out)
    for label, g in sig.generators():
        print(f"growth on {label}: {ad_growth(u, g, args.steps)}", file=out)
    if u.is_scalar():
        print("ideal: scalar, already a unit", file=out)
    else:
        probe = simplicity_probe(u, steps=args.steps, degree_cap=args.degree_cap)
        print(f"ideal: {probe}", file=out)
    return EXIT_OK


def cmd_classify(args, out, err):
    a, b = _signature(args.a, err), _signature(args.b, err)
    verdict = decide_isomorphism(a, b, radius=args.radius, trials=args.trials, seed=args.seed)
    if isinstance(verdict, Isomorphic):
        print(f"# seed={args.seed:#x}", file=out)
        print(verdict, file=out)
        print(verdict.report, file=out)
        return EXIT_OK if verdict.report.passed else EXIT_INVARIANT
    print(verdict, file=out)
    return EXIT_OK if isinstance(verdict, NotIsomorphic) else EXIT_UNDECIDED


def cmd_iso_apply(args, out, err):
    a, b = _signature(args.a, err), _signature(args.b, err)
    g = BlockMatrix.from_full(a.field, parse_matrix(a.field, args.g), a.l2)
    sigma = build_sigma(g, a, b)
    for text in args.exprs:
        print(apply_sigma(sigma, parse_element(a, text)), file=out)
    return EXIT_OK


def cmd_invariants(args, out, err):
    sig = _need_signature(args, err)
    inv = gamma_invariants(sig.gamma, sig.l2)
    print(" ".join(f"{k}={v}" for k, v in inv.items()), file=out)
    return EXIT_OK


def cmd_selfcheck(args, out, err):
    from .sampling import random_A_monomials, random_element

    sig = _need_signature(args, err)
    rng = random.Random(args.seed)
    cap = args.degree_cap
    print(f"# seed={args.seed:#x}", file=out)
    checks = {"associativity": 0, "jacobi": 0, "action": 0, "weyl relations": 0}
    failed = dict.fromkeys(checks, 0)
    basis = random_A_monomials(sig, 2)
    for _ in range(args.trials):
        u, v, w = (random_element(sig, rng, terms=2, degree_cap=cap, alpha_cap=2) for _ in range(3))
        checks["associativity"] += 1
        if op_mul(op_mul(u, v), w) != op_mul(u, op_mul(v, w)):
            failed["associativity"] += 1
        checks["jacobi"] += 1
        jac = bracket(u, bracket(v, w)) + bracket(v, bracket(w, u)) + bracket(w, bracket(u, v))
        if jac:
            failed["jacobi"] += 1
        a = rng.choice(basis)
        checks["action"] += 1
        if act_on_A(op_mul(u, v), a) != act_on_A(u, act_on_A(v, a)):
            failed["action"] += 1
    for p in range(1, sig.ell + 1):
        for q in range(1, sig.l1 + sig.l2 + 1):
            checks["weyl relations"] += 1
            if bracket(sig.d(p), sig.t(q)) != sig.scalar(int(p == q)):
                failed["weyl relations"] += 1
        for label, x in sig.generators()[:2 * sig.gamma.rank]:
            checks["weyl relations"] += 1
            alpha = next(iter(x.terms)).alpha
            if bracket(sig.d(p), x) != x.scale(sig.alpha_axes(alpha)[p - 1]):
                failed["weyl relations"] += 1
    for name in checks:
        status = "ok" if not failed[name] else "FAILED"
        print(f"{name}: {checks[name] - failed[name]}/{checks[name]} {status}", file=out)
    if any(failed.values()):
        return EXIT_INVARIANT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weyl", description="Exact computations in Weyl-type algebras.")
    common = _Parser(add_help=False)
    common.add_argument("-s", "--signature", help="signature file")
    common.add_argument("--seed", type=_hex, default=DEFAULT_SEED, help="hex seed (default c0ffee)")
    common.add_argument("--degree-cap", type=int, default=8)
    common.add_argument("--steps", type=int, default=6)
    common.add_argument("--radius", type=int, default=3)
    common.add_argument("--trials", type=int, default=20)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("mul", parents=[common], help="left-to-right product")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_mul)
    p = sub.add_parser("bracket", parents=[common], help="commutator [u, v]")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_bracket)
    p = sub.add_parser("ad", parents=[common], help="iterate ad u on v")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_ad)
    p = sub.add_parser("analyze", parents=[common], help="local finiteness and ideal probe")
    p.add_argument("u")
    p.set_defaults(func=cmd_analyze)
    p = sub.add_parser("classify", parents=[common], help="decide isomorphism of two algebras")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("iso-apply", parents=[common], help="apply the isomorphism built from g")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--g", required=True, help="block matrix, e.g. [[2]]")
    p.add_argument("exprs", nargs="+")
    p.set_defaults(func=cmd_iso_apply)
    p = sub.add_parser("invariants", parents=[common], help="orbit invariants of Gamma")
    p.set_defaults(func=cmd_invariants)
    p = sub.add_parser("selfcheck", parents=[common], help="randomized identity checks")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out, err)
    except _UsageError as exc:
        print(f"weyl: error: {exc}", file=err)
        return EXIT_USAGE
    except _SignatureError as exc:
        print(f"weyl: invalid signature: {exc}", file=err)
        return EXIT_SIGNATURE
    except (InvariantViolation, GeneratorCheckFailed) as exc:
        print(f"weyl: invariant violation: {exc}", file=err)
        return EXIT_INVARIANT
    except ParseError as exc:
        print(f"weyl: parse error: {exc}", file=err)
        return EXIT_USAGE
    except WeylError as exc:
        print(f"weyl: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
