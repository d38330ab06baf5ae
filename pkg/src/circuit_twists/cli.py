"""Command-line entry point: ``circuit-twists {analyze,verify-suite,equal,nf}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import affine, garside
from .engine import analyze
from .errors import CircuitTwistsError, GarsideError
from .suite import verify_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _alphabet(type_: str, n: int):
    if type_ == "Atilde":
        return affine.affine_alphabet(n)
    return garside.model(type_, n).alphabet


def _nf(type_: str, n: int, w) -> garside.GarsideNormalForm:
    return affine.affine_normal_form(w) if type_ == "Atilde" else garside.normal_form(type_, n, w)


def cmd_analyze(args) -> int:
    report = analyze(args.spec)
    _emit(args, report.to_json(), report.to_text())
    return EXIT_OK if report.consistent else EXIT_FAILED


def cmd_verify_suite(args) -> int:
    results = verify_suite(args.n_max, random_pairs=args.pairs, seed=args.seed)
    ok = all(r.passed for r in results)
    payload = {"n_max": args.n_max, "passed": ok, "checks": [r.to_json() for r in results]}
    text = "\n".join(r.line() for r in results)
    text += f"\n{sum(r.passed for r in results)}/{len(results)} checks passed"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_equal(args) -> int:
    a = _alphabet(args.type, args.n)
    w1, w2 = a.parse(args.lhs), a.parse(args.rhs)
    if args.type == "Atilde":
        result = affine.affine_equal(w1, w2)
    else:
        result = garside.equal(args.type, args.n, w1, w2)
    nf1, nf2 = _nf(args.type, args.n, w1), _nf(args.type, args.n, w2)
    payload = {
        "type": args.type,
        "n": args.n,
        "equal": result,
        "lhs_normal_form": nf1.to_json(),
        "rhs_normal_form": nf2.to_json(),
    }
    _emit(args, payload, f"{'equal' if result else 'not equal'}\n  lhs: {nf1}\n  rhs: {nf2}")
    return EXIT_OK if result else EXIT_FAILED


def cmd_nf(args) -> int:
    w = _alphabet(args.type, args.n).parse(args.word)
    nf = _nf(args.type, args.n, w)
    payload = {"type": args.type, "n": args.n, "word": str(w), "normal_form": nf.to_json()}
    if args.type == "Atilde":
        payload["model"] = "B"
    _emit(args, payload, str(nf))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    group = fmt.add_mutually_exclusive_group()
    group.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output")
    group.add_argument("--text", dest="format", action="store_const", const="text", help="plain text output (default)")
    fmt.set_defaults(format="text")

    p = argparse.ArgumentParser(
        prog="circuit-twists",
        description="Cycle relations among Dehn twists about circuits, decided with Garside normal forms.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[fmt], help="analyse a surface spec (JSON file)")
    a.add_argument("spec")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-suite", parents=[fmt], help="run the verification battery")
    v.add_argument("--n-max", type=int, default=6, choices=range(3, 9), metavar="K", help="largest circuit size, 3..8")
    v.add_argument("--pairs", type=int, default=2000, help="random relator pairs for the presentation check")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify_suite)

    word_help = "type A: n strands (s1..s(n-1)); B: t,s1..s(n-1); D: s1..sn; Atilde: s1..sn"
    e = sub.add_parser("equal", parents=[fmt], help="decide equality of two words", epilog=word_help)
    e.add_argument("--type", required=True, choices=("A", "B", "D", "Atilde"))
    e.add_argument("--n", required=True, type=int)
    e.add_argument("--lhs", required=True)
    e.add_argument("--rhs", required=True)
    e.set_defaults(func=cmd_equal)

    f = sub.add_parser("nf", parents=[fmt], help="Garside normal form of a word", epilog=word_help)
    f.add_argument("--type", required=True, choices=("A", "B", "D", "Atilde"))
    f.add_argument("--n", required=True, type=int)
    f.add_argument("--word", required=True)
    f.set_defaults(func=cmd_nf)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GarsideError:
        raise
    except (CircuitTwistsError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
