"""Command-line front end: ``peterson <subcommand> ...``.

Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse error,
3 resource cap exceeded (or an undetermined Groebner check).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import limits
from .combinatorics import Subset, all_subsets, check_rank, fixed_point_permutation, v_permutation
from .errors import DomainError, ParseError, PetersonError, ResourceCapExceeded
from .gkm import localize
from .presentation import export_presentation
from .schubert import (
    BasisExpansion, expand_monomial, giambelli_monomial, giambelli_sigma, giambelli_verify,
    monk_product, restrict_class,
)
from .poly import format_rational
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

MONOMIAL_HELP = """\
EXPR grammar for `expand`: factors separated by '*', each factor 'pI' or
'pI^K' with 1 <= I <= N-1 and K >= 0, e.g. "p1^3" or "p1*p2*p3".  The
empty product may be written "1".  The parameter 't' is not accepted.
"""

_FACTOR = re.compile(r"\s*p(\d+)(?:\^(\d+))?\s*")


def parse_generator_monomial(n: int, text: str) -> list[int]:
    """Turn ``"p1^2*p3"`` into the factor multiset ``[1, 1, 3]``."""
    if text.strip() == "1":
        return []
    factors = []
    pos = 0
    while True:
        m = _FACTOR.match(text, pos)
        if not m:
            bad = text[pos:].lstrip()
            where = len(text) - len(bad)
            if bad.startswith("t"):
                raise ParseError("'t' is not allowed in expand input", text, where)
            raise ParseError("expected a factor 'pI' or 'pI^K'", text, where)
        i = int(m.group(1))
        if not 1 <= i <= n - 1:
            raise DomainError(f"generator p{i} does not exist at rank {n}")
        factors += [i] * int(m.group(2) or 1)
        pos = m.end()
        if pos == len(text):
            return factors
        if text[pos] != "*":
            raise ParseError(f"unexpected {text[pos]!r}", text, pos)
        pos += 1


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _rank(args, cap=None):
    check_rank(args.n)
    cap = limits.max_rank() if cap is None else cap
    if args.cap is not None:
        cap = args.cap
    if args.n > cap:
        raise ResourceCapExceeded(f"rank {args.n} exceeds cap {cap}")
    return args.n


def cmd_fixed_points(args):
    n = _rank(args)
    rows = []
    for A in all_subsets(n):
        word, _ = v_permutation(A)
        rows.append((A, fixed_point_permutation(A), word))
    payload = {
        "n": n,
        "fixed_points": [
            {"subset": list(A.members), "w": str(w), "v_word": list(word)} for A, w, word in rows
        ],
    }
    text = "\n".join(f"{str(A):<16} {str(w):<12} ({','.join(map(str, word))})"
                     for A, w, word in rows)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_monk(args):
    n = _rank(args)
    A = Subset.parse(n, args.subset)
    e = monk_product(n, args.i, A)
    _emit(args, e.to_json(), f"p{args.i} * p{A} = {e}")
    return EXIT_OK


def cmd_giambelli(args):
    n = _rank(args)
    A = Subset.parse(n, args.subset)
    sigma = giambelli_sigma(A)
    mono = giambelli_monomial(A)
    ok = giambelli_verify(n, A)
    payload = {"n": n, "subset": list(A.members), "sigma": format_rational(sigma),
               "monomial": str(mono), "verified": ok}
    _emit(args, payload, f"p{A} = {mono}    [{'verified' if ok else 'MISMATCH'}]")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_expand(args):
    n = _rank(args)
    e = expand_monomial(n, parse_generator_monomial(n, args.expr))
    _emit(args, e.to_json(), str(e))
    return EXIT_OK


def cmd_restrict(args):
    n = _rank(args)
    A = Subset.parse(n, args.a)
    B = Subset.parse(n, args.b)
    value = restrict_class(BasisExpansion.basis(A), B)
    payload = {"n": n, "class": list(A.members), "fixed_point": list(B.members),
               "value": str(value)}
    _emit(args, payload, f"p{A}(w{B}) = {value}")
    return EXIT_OK


def cmd_localize(args):
    n = _rank(args, limits.oracle_rank())
    if args.cls.strip().startswith("{"):
        e = BasisExpansion.basis(Subset.parse(n, args.cls))
    else:
        e = expand_monomial(n, parse_generator_monomial(n, args.cls))
    loc = localize(e)
    text = "\n".join(f"{str(B):<16} {v}" for B, v in loc.items())
    _emit(args, loc.to_json(), text)
    return EXIT_OK


def cmd_presentation(args):
    n = _rank(args, limits.groebner_rank())
    payload = export_presentation(n, quadratic_only=args.quadratic_only)
    lines = [g["poly"] for g in payload["generators"]]
    lines.append(f"# quadratic_conjecture: {payload['flags']['quadratic_conjecture']}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_CAP if payload["flags"]["quadratic_conjecture"] == "undetermined" else EXIT_OK


def cmd_verify(args):
    cap = limits.groebner_rank() if args.suite in ("quadratic", "golden-n4") \
        else limits.oracle_rank()
    n = _rank(args, cap)
    report = run_suite(args.suite, n, jobs=args.jobs)
    data = report.to_json()
    lines = [f"suite {report.suite} n={n}: {data['status']} "
             f"({report.total} checks, {len(report.failures)} failures, {report.wall_time:.3f}s)"]
    for ident, expected, actual in report.failures:
        lines.append(f"  {ident}: expected {expected}, got {actual}")
    if report.details:
        lines.append(f"  details: {json.dumps(report.details)}")
    _emit(args, data, "\n".join(lines))
    if report.status == "undetermined":
        return EXIT_CAP
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, metavar="N",
                        help="override the rank cap for this command")

    parser = argparse.ArgumentParser(
        prog="peterson",
        description="Equivariant Schubert calculus on type A Peterson varieties.",
        epilog=MONOMIAL_HELP + "\nResource caps: see PETERSON_* environment variables.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fixed-points", parents=[common], help="list w_A and v_A for all A")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("monk", parents=[common], help="expand p_i * p_A")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("subset", metavar="A")
    p.set_defaults(func=cmd_monk)

    p = sub.add_parser("giambelli", parents=[common], help="p_A as a monomial in the p_i")
    p.add_argument("n", type=int)
    p.add_argument("subset", metavar="A")
    p.set_defaults(func=cmd_giambelli)

    p = sub.add_parser("expand", parents=[common], help="expand a monomial in the p_i",
                       epilog=MONOMIAL_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("n", type=int)
    p.add_argument("expr", metavar="EXPR")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("restrict", parents=[common], help="p_A restricted to w_B")
    p.add_argument("n", type=int)
    p.add_argument("a", metavar="A")
    p.add_argument("b", metavar="B")
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("localize", parents=[common],
                       help="restrictions of a class (subset '{..}' or monomial) to all fixed points")
    p.add_argument("n", type=int)
    p.add_argument("cls", metavar="CLASS")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("presentation", parents=[common], help="generators of the ideal K")
    p.add_argument("n", type=int)
    p.add_argument("--quadratic-only", action="store_true")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("n", type=int)
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ResourceCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PetersonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
