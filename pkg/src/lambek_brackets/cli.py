"""Command-line front end.

Exit status: 0 derivable / accepted / suites passed, 1 underivable /
rejected / a suite failed, 2 usage or input error.  Results go to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import verify
from .calculus import Calculus, Derivation, InvalidInput, Rule, check_input
from .grammar import BracketBudget, UnknownSymbol, load_grammar, s_accepts, t_accepts
from .prover import prove, session
from .syntax import Sequent
from .textio import SyntaxError, format_sequent, names_from_symbols, parse_sequent
from .translate import translate_sequent

OK, NO, USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def derivation_to_json(d: Derivation, names: dict[int, str] | None = None) -> dict:
    return {
        "rule": d.rule.name,
        "conclusion": format_sequent(d.conclusion, names),
        "premises": [derivation_to_json(p, names) for p in d.premises],
    }


def derivation_from_json(data: dict) -> Derivation:
    return Derivation(
        Rule[data["rule"]],
        parse_sequent(data["conclusion"]),
        tuple(derivation_from_json(p) for p in data["premises"]),
    )


def format_derivation(d: Derivation, names: dict[int, str] | None = None, indent: int = 0) -> str:
    lines = [f"{'  ' * indent}{format_sequent(d.conclusion, names)}    [{d.rule.name}]"]
    for p in d.premises:
        lines.append(format_derivation(p, names, indent + 1))
    return "\n".join(lines)


def _read_sequent(text: str, cal: Calculus) -> tuple[Sequent, dict[int, str]]:
    symbols: dict[str, int] = {}
    s = parse_sequent(text, symbols)
    check_input(s, cal)
    return s, names_from_symbols(symbols)


def cmd_check(args: argparse.Namespace) -> int:
    cal = Calculus(args.calculus)
    s, _ = _read_sequent(args.sequent, cal)
    ok = session().derivable(s, cal)
    print("derivable" if ok else "underivable")
    return OK if ok else NO


def cmd_prove(args: argparse.Namespace) -> int:
    cal = Calculus(args.calculus)
    s, names = _read_sequent(args.sequent, cal)
    d = prove(s, cal)
    if d is None:
        print("underivable", file=sys.stderr)
        return NO
    if args.format == "json":
        print(json.dumps(derivation_to_json(d, names), indent=2))
    else:
        print(format_derivation(d, names))
    return OK


def cmd_translate(args: argparse.Namespace) -> int:
    symbols: dict[str, int] = {}
    s = parse_sequent(args.sequent, symbols)
    t, q = translate_sequent(s)
    names = names_from_symbols(symbols)
    print(format_sequent(t, names))
    print(f"q = p{q}", file=sys.stderr)
    return OK


def cmd_grammar(args: argparse.Namespace) -> int:
    g = load_grammar(args.grammar)
    word = args.word.split() if " " in args.word.strip() else list(args.word)
    if args.mode == "s":
        ok = s_accepts(g, word)
    else:
        budget = None if args.budget is None else BracketBudget(args.budget)
        ok = t_accepts(g, word, budget)
    print("accepted" if ok else "rejected")
    return OK if ok else NO


def cmd_selftest(args: argparse.Namespace) -> int:
    if args.max_size < 2:
        print("error: --max-size must be at least 2", file=sys.stderr)
        return USAGE
    results = verify.selftest(args.max_size)
    for r in results:
        print(r.summary())
    return OK if all(r.passed for r in results) else NO


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="lambek-brackets", description="Prover and unit elimination for the Lambek calculus with brackets.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    cals = [c.value for c in Calculus]

    p = sub.add_parser("check", help="decide derivability of a sequent")
    p.add_argument("sequent")
    p.add_argument("--calculus", choices=cals, default="lbstar1")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("prove", help="print a derivation of a sequent")
    p.add_argument("sequent")
    p.add_argument("--calculus", choices=cals, default="lbstar1")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("translate", help="eliminate the unit constant from a sequent")
    p.add_argument("sequent")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("grammar", help="test a word against a grammar file")
    p.add_argument("grammar")
    p.add_argument("word", help="letters of the word; separate multi-character symbols by spaces")
    p.add_argument("--mode", choices=["s", "t"], default="t")
    p.add_argument("--budget", type=int, default=None, help="maximum number of bracket pairs (t mode)")
    p.set_defaults(func=cmd_grammar)

    p = sub.add_parser("selftest", help="run the exhaustive equivalence suites")
    p.add_argument("--max-size", type=int, default=5)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SyntaxError as e:
        print(f"syntax error: {e}", file=sys.stderr)
    except InvalidInput as e:
        print(f"invalid input: {e}", file=sys.stderr)
    except (UnknownSymbol, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
