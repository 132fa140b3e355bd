"""
Command line front end.

    hodgeledger eval "sym(3, U)" --out betti
    hodgeledger verify og6 [--hn-coeff K] [--out json|text]
    hodgeledger ledger check [--fixtures PATH]
    hodgeledger fixtures list

Exit status: 0 on success, 1 when a verification fails, 2 on usage, parse,
evaluation or fixture errors.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import og6_pipeline, string_ledger
from .errors import ExprError, FixtureInvalid, HodgeLedgerError, Inconsistent
from .expr import ATOMS, evaluate, parse
from .hodge_core import numerics
from .render import FORMATS, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_ATOM_NOTES = {
    "point": "Q in degree 0",
    "L": "Lefschetz class Q[-2](-1)",
    "U": "H^ev(J) of the abelian surface J",
    "W": "H^odd(J)",
    "J": "H^*(J), J a principally polarized abelian surface",
    "A": "H^*(J^v x J), with H^*(J^v) identified with H^*(J)",
    "Sigma": "H^*(A/+-1) = H^ev(A)",
    "Z": "H^ev(J) + 24 L (double cover of the Kummer K3, blown down and up)",
    "kummerK3": "H^ev(J) + 16 L",
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hodgeledger", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expression")
    p.add_argument("--out", choices=FORMATS, default="json")

    p = sub.add_parser("verify", help="run a verification pipeline")
    p.add_argument("target", choices=["og6"])
    p.add_argument("--hn-coeff", type=int, default=og6_pipeline.HN_COEFF)
    p.add_argument("--out", choices=["json", "text"], default="text")

    p = sub.add_parser("ledger", help="check a ledger fixture")
    p.add_argument("action", choices=["check"])
    p.add_argument("--fixtures", default=None, help="path to a ledger/v1 document")

    p = sub.add_parser("fixtures", help="list named classes")
    p.add_argument("action", choices=["list"])
    return parser


def _cmd_eval(args, out):
    cls = evaluate(parse(args.expression))
    print(render(cls, args.out), file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    ledger = string_ledger.load_ledger()
    report = og6_pipeline.verify_og6(hn_coeff=args.hn_coeff, ledger=ledger)
    if args.out == "json":
        print(report.to_json(), file=out)
    else:
        nums = numerics(og6_pipeline.h_N(args.hn_coeff) + og6_pipeline.grothendieck_difference())
        print(f"H*(Mtilde) via difference: euler {nums.euler}", file=out)
        print("betti " + " ".join(map(str, nums.betti_vector(12))), file=out)
        print(report.to_text(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_ledger(args, out):
    ledger = string_ledger.load_ledger(args.fixtures)
    report = string_ledger.verify_component_table(ledger)
    print(f"fixture: {ledger.source}", file=out)
    print(report.to_text(), file=out)
    try:
        sols = sorted(string_ledger.solve_unknowns(ledger))
    except Inconsistent as exc:
        print(f"solutions: none ({exc})", file=out)
        return EXIT_FAIL
    print("solutions (r, r24): " + ", ".join(f"({a}, {b})" for a, b in sols), file=out)
    ok = report.passed and sols == [(0, 1), (1, 0)]
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_fixtures(args, out):
    width = max(map(len, ATOMS))
    for name in ATOMS:
        cls = evaluate(parse(name))
        print(f"{name:<{width}}  dim {cls.dimension():>3}  {_ATOM_NOTES[name]}", file=out)
    return EXIT_OK


_COMMANDS = {
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "ledger": _cmd_ledger,
    "fixtures": _cmd_fixtures,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except ExprError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE
    except FixtureInvalid as exc:
        print(f"error: FixtureInvalid: {exc}", file=err)
        return EXIT_USAGE
    except HodgeLedgerError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=err)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
