"""Command-line front end.

Every command prints either plain text (line-oriented, sorted) or JSON
(schema-stable, sorted); output is byte-identical across runs.  Exit
codes: 0 success, 1 verification counterexample, 2 malformed input,
3 precondition violation, 4 term budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from ._limits import TermBudgetExceeded, term_budget
from .perm import Perm, check_partition, format_perm, parse_perm
from .poly import Polynomial, fundamental_quasisym, slide_polynomial
from .schubert import schubert_via_compatible, schubert_via_slides, schur, stanley
from .transition import (
    lr_chains,
    lr_coefficient,
    monk_multiply,
    schubert_times_schur,
    truncate_last_descent,
)
from .verify import SUITE_UNITS, SUITES, CounterexampleError


def _perm(text: str) -> Perm:
    return parse_perm(text)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"cannot read integers from {text!r}") from None


def _partition(text: str) -> tuple[int, ...]:
    return check_partition(_ints(text))


def _weak_comp(text: str) -> tuple[int, ...]:
    comp = _ints(text)
    if any(x < 0 for x in comp):
        raise ValueError(f"weak composition parts must be nonnegative: {comp!r}")
    return comp


def _strong_comp(text: str) -> tuple[int, ...]:
    comp = _ints(text)
    if any(x < 1 for x in comp):
        raise ValueError(f"composition parts must be positive: {comp!r}")
    return comp


def _emit_poly(p: Polynomial, fmt: str) -> None:
    if fmt == "plain":
        print(p)
    else:
        terms = [
            {"coeff": c, "exponents": list(e)} for e, c in p.sorted_terms()
        ]
        print(json.dumps({"terms": terms}))


def _emit_expansion(
    expansion: dict[Perm, int],
    fmt: str,
    chains: dict[Perm, tuple] | None = None,
) -> None:
    items = sorted(expansion.items())
    if fmt == "plain":
        if not items:
            print("0")
        for w, c in items:
            print(f"{format_perm(w)}: {c}")
            if chains is not None:
                for chain in chains.get(w, ()):
                    print(f"  {chain}")
    else:
        terms = []
        for w, c in items:
            entry: dict = {"perm": list(w), "coeff": c}
            if chains is not None:
                entry["chains"] = [str(chain) for chain in chains.get(w, ())]
            terms.append(entry)
        print(json.dumps({"terms": terms}))


def _cmd_schubert(args: argparse.Namespace) -> int:
    build = schubert_via_compatible if args.method == "compatible" else schubert_via_slides
    _emit_poly(build(args.perm), args.format)
    return 0


def _cmd_stanley(args: argparse.Namespace) -> int:
    _emit_poly(stanley(args.perm, args.k), args.format)
    return 0


def _cmd_schur(args: argparse.Namespace) -> int:
    _emit_poly(schur(args.partition, args.k), args.format)
    return 0


def _cmd_slide(args: argparse.Namespace) -> int:
    _emit_poly(slide_polynomial(args.comp), args.format)
    return 0


def _cmd_fqs(args: argparse.Namespace) -> int:
    _emit_poly(fundamental_quasisym(args.comp, args.k), args.format)
    return 0


def _cmd_multiply(args: argparse.Namespace) -> int:
    if args.chains:
        chains = lr_chains(args.perm, args.partition, args.k)
        expansion = {w: len(cs) for w, cs in chains.items()}
        _emit_expansion(expansion, args.format, chains)
    else:
        _emit_expansion(
            schubert_times_schur(args.perm, args.partition, args.k), args.format
        )
    return 0


def _cmd_truncate(args: argparse.Namespace) -> int:
    _emit_expansion(truncate_last_descent(args.perm), args.format)
    return 0


def _cmd_monk(args: argparse.Namespace) -> int:
    _emit_expansion(monk_multiply(args.perm, args.k), args.format)
    return 0


def _cmd_coeff(args: argparse.Namespace) -> int:
    c = lr_coefficient(args.perm, args.partition, args.k, args.target)
    if args.format == "plain":
        print(c)
    else:
        print(json.dumps({"coeff": c}))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    counts: dict[str, int] = {}
    try:
        for name in names:
            counts[name] = SUITES[name](args.nmax)
    except CounterexampleError as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1
    if args.format == "plain":
        if args.suite == "all":
            print("OK")
        else:
            print(f"OK ({counts[args.suite]} {SUITE_UNITS[args.suite]})")
    elif args.suite == "all":
        print(json.dumps({"ok": True, "counts": counts}))
    else:
        print(json.dumps({"ok": True, "suite": args.suite, "count": counts[args.suite]}))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("plain", "json"), default="plain", help="output format"
    )
    common.add_argument(
        "--timeout-terms",
        type=int,
        metavar="N",
        help="abort with exit code 4 after enumerating N items",
    )

    parser = argparse.ArgumentParser(
        prog="schubcalc",
        description="Exact Schubert-calculus polynomials and product expansions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", parents=[common], help="Schubert polynomial of w")
    p.add_argument("perm", type=_perm)
    p.add_argument("--method", choices=("slides", "compatible"), default="slides")
    p.set_defaults(func=_cmd_schubert)

    p = sub.add_parser("stanley", parents=[common], help="Stanley polynomial of w in k variables")
    p.add_argument("perm", type=_perm)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_stanley)

    p = sub.add_parser("schur", parents=[common], help="Schur polynomial of a partition in k variables")
    p.add_argument("partition", type=_partition)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("slide", parents=[common], help="fundamental slide polynomial of a weak composition")
    p.add_argument("comp", type=_weak_comp)
    p.set_defaults(func=_cmd_slide)

    p = sub.add_parser("fqs", parents=[common], help="fundamental quasisymmetric polynomial in k variables")
    p.add_argument("comp", type=_strong_comp)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_fqs)

    p = sub.add_parser("multiply", parents=[common], help="Schubert expansion of S_u times s_lam(x1..xk)")
    p.add_argument("perm", type=_perm)
    p.add_argument("partition", type=_partition)
    p.add_argument("k", type=int)
    p.add_argument("--chains", action="store_true", help="list witness chains per term")
    p.set_defaults(func=_cmd_multiply)

    p = sub.add_parser("truncate", parents=[common], help="expansion of S_w with its last descent variable set to 0")
    p.add_argument("perm", type=_perm)
    p.set_defaults(func=_cmd_truncate)

    p = sub.add_parser("monk", parents=[common], help="expansion of S_w times (x1 + ... + xk)")
    p.add_argument("perm", type=_perm)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_monk)

    p = sub.add_parser("coeff", parents=[common], help="one coefficient of the multiply expansion")
    p.add_argument("perm", type=_perm)
    p.add_argument("partition", type=_partition)
    p.add_argument("k", type=int)
    p.add_argument("target", type=_perm)
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("verify", parents=[common], help="run exhaustive identity suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--nmax", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        with term_budget(args.timeout_terms):
            return args.func(args)
    except TermBudgetExceeded as exc:
        print(f"error: {exc}; partial results discarded", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
