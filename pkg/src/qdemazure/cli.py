"""Command-line surface: evaluate scalars, print words, and run verify suites.

Exit codes: 0 on success, 1 when a verify suite finds a counterexample, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_formula as cf
from .magic import magic
from . import rou
from .report import SCHEMA_VERSION
from .verify import SUITES, Bounds, run_suite
from .words import build_word, xi_oracle, xi_recursive


def _value_output(kind: str, inputs: dict, value) -> dict:
    return {"schema": SCHEMA_VERSION, "kind": kind, "inputs": inputs, "value": value.to_json()}


def _emit(args, kind: str, inputs: dict, value) -> None:
    if args.format == "json":
        print(json.dumps(_value_output(kind, inputs, value), sort_keys=True))
    else:
        print(value.render())


def _cmd_xi(args) -> int:
    methods = {"formula": cf.xi_formula, "oracle": xi_oracle, "recursion": xi_recursive}
    value = methods[args.method](args.a, args.b, args.i, args.k)
    _emit(args, "xi", {"a": args.a, "b": args.b, "i": args.i, "k": args.k, "method": args.method}, value)
    return 0


def _cmd_xi_rou(args) -> int:
    if args.method == "formula":
        value = rou.xi_rou_formula(args.m, args.a, args.i)
    else:
        value = rou.xi_rou_specialized(args.m, args.a, args.i, "formula")
    _emit(args, "xi-rou", {"m": args.m, "a": args.a, "i": args.i, "method": args.method}, value)
    return 0


def _cmd_magic(args) -> int:
    value = magic(args.nu, args.k, args.beta, args.eps)
    _emit(args, "magic", {"nu": args.nu, "k": args.k, "beta": args.beta, "eps": args.eps}, value)
    return 0


def _cmd_word(args) -> int:
    word = build_word(args.a, args.b, args.i)
    if args.format == "json":
        out = {
            "schema": SCHEMA_VERSION,
            "kind": "word",
            "inputs": {"a": args.a, "b": args.b, "i": args.i},
            "letters": list(word.letters),
        }
        print(json.dumps(out, sort_keys=True))
    else:
        print(" ".join(str(c) for c in word.letters))
    return 0


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    bounds = Bounds(max_len=args.max_len, max_nu=args.max_nu, max_m=args.max_m)
    reports = [run_suite(name, bounds, jobs=args.jobs) for name in names]
    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2, sort_keys=True)
        print(text)
    else:
        for r in reports:
            print(r.render_text())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.to_dict() for r in reports], fh, indent=2, sort_keys=True)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdemazure",
        description="Exact divided-difference scalars for the deformed affine type-A2 action.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_xi = sub.add_parser("xi", help="evaluate a word scalar")
    p_xi.add_argument("--a", type=int, required=True)
    p_xi.add_argument("--b", type=int, required=True)
    p_xi.add_argument("--i", type=int, required=True, choices=(1, 2, 3))
    p_xi.add_argument("--k", type=int, required=True)
    p_xi.add_argument("--method", choices=("formula", "oracle", "recursion"), default="formula")
    add_format(p_xi)
    p_xi.set_defaults(func=_cmd_xi)

    p_rou = sub.add_parser("xi-rou", help="evaluate the staircase scalar at a root of unity")
    p_rou.add_argument("--m", type=int, required=True)
    p_rou.add_argument("--a", type=int, required=True)
    p_rou.add_argument("--i", type=int, required=True, choices=(1, 2, 3))
    p_rou.add_argument("--method", choices=("formula", "specialize"), default="formula")
    add_format(p_rou)
    p_rou.set_defaults(func=_cmd_xi_rou)

    p_magic = sub.add_parser("magic", help="evaluate the magic binomial sum")
    p_magic.add_argument("--nu", type=int, required=True)
    p_magic.add_argument("--k", type=int, required=True)
    p_magic.add_argument("--beta", type=int, required=True)
    p_magic.add_argument("--eps", type=int, required=True, choices=(-1, 0, 1))
    add_format(p_magic)
    p_magic.set_defaults(func=_cmd_magic)

    p_word = sub.add_parser("word", help="print the letters of a word")
    p_word.add_argument("--a", type=int, required=True)
    p_word.add_argument("--b", type=int, required=True)
    p_word.add_argument("--i", type=int, required=True, choices=(1, 2, 3))
    add_format(p_word)
    p_word.set_defaults(func=_cmd_word)

    p_verify = sub.add_parser("verify", help="run an identity sweep")
    p_verify.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p_verify.add_argument("--max-len", type=int, default=None, dest="max_len")
    p_verify.add_argument("--max-nu", type=int, default=None, dest="max_nu")
    p_verify.add_argument("--max-m", type=int, default=None, dest="max_m")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--out", type=str, default=None, help="also write the JSON report here")
    add_format(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
