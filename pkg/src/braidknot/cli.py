"""Command-line front end: ``braidknot <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import LaurentPoly, Permutation, compose
from .blanket import BLANKET_STRANDS, blanket_braid, blanket_report
from .braid import (
    BraidWord,
    classify,
    crossing_certificate,
    free_reduce,
    markov_simplify,
)
from .invariants import (
    DEFAULT_MAX_CROSSINGS,
    invariants_of_braid,
    invariants_of_diagram,
)
from .link import braid_closure, parse_pd, to_pd, writhe


class CliError(Exception):
    pass


def _perm(args: argparse.Namespace) -> str:
    perms = [Permutation.parse(t) for t in args.perms]
    need = {"compose": None, "inverse": 1, "order": 1, "cycles": 1, "factor": 1}[args.sub]
    if need is not None and len(perms) != need:
        raise CliError(f"perm {args.sub} takes exactly one permutation")
    if args.sub == "compose":
        if len(perms) < 2:
            raise CliError("perm compose needs at least two permutations")
        out = perms[0]
        for p in perms[1:]:
            out = compose(out, p)
        return str(out)
    p = perms[0]
    if args.sub == "inverse":
        return str(p.inverse())
    if args.sub == "order":
        return str(p.order())
    if args.sub == "cycles":
        cycles = [c for c in p.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles) or "()"
    word = p.transpositions()
    return " ".join(f"t{i}" for i in word) if word else "1"


def _braid(args: argparse.Namespace) -> str:
    word = BraidWord.parse(args.word, args.n)
    if args.sub == "perm":
        return str(word.permutation())
    if args.sub == "pure":
        return "true" if word.is_pure() else "false"
    if args.sub == "classify":
        return str(classify(word))
    if args.sub == "crossings":
        return str(crossing_certificate(word))
    if args.sub == "simplify":
        small = markov_simplify(word)
        return f"{small} (n={small.strands})" if small.letters else f"(empty) (n={small.strands})"
    reduced = free_reduce(word)
    return str(reduced) if reduced.letters else "(empty)"


def _closure(args: argparse.Namespace) -> str:
    return to_pd(braid_closure(BraidWord.parse(args.word, args.n))).rstrip("\n")


def _poly_out(p: LaurentPoly, as_json: bool):
    return p.to_json() if as_json else str(p)


def _invariants(args: argparse.Namespace) -> str:
    cap = args.max_crossings
    if args.pd is not None:
        if args.word is not None or args.n is not None:
            raise CliError("give either --pd or -n with a word, not both")
        try:
            text = Path(args.pd).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {args.pd}: {exc.strerror}") from None
        d = parse_pd(text)
        components, conway, jones = invariants_of_diagram(d, cap)
        record = {"components": components, "conway": conway, "jones": jones, "writhe": writhe(d)}
    else:
        if args.n is None or args.word is None:
            raise CliError("invariants needs -n <strands> and a word, or --pd <file>")
        word = BraidWord.parse(args.word, args.n)
        if args.n == BLANKET_STRANDS and word == blanket_braid():
            raise CliError(
                "the full blanket braid is far beyond the crossing cap; "
                "run 'braidknot blanket' for the per-pattern closures"
            )
        inv = invariants_of_braid(word, cap)
        record = {
            "components": inv.components,
            "conway": inv.conway,
            "jones": inv.jones,
            "exponent_sum": inv.exponent_sum,
        }
    if args.json:
        return json.dumps(
            {k: _poly_out(v, True) if isinstance(v, LaurentPoly) else v for k, v in record.items()},
            indent=2,
        )
    return "\n".join(f"{k.replace('_', ' ')}: {v}" for k, v in record.items())


def _blanket(args: argparse.Namespace) -> str:
    report = blanket_report()
    return report.to_json() if args.json else report.to_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidknot",
        description="Braid words, permutations, link diagrams and their polynomial invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("perm", help="permutations in one-line notation, e.g. (3,1,2)")
    p.add_argument("sub", choices=["compose", "inverse", "order", "cycles", "factor"])
    p.add_argument("perms", nargs="+", metavar="PERM")
    p.set_defaults(func=_perm)

    b = sub.add_parser("braid", help="braid words such as \"1 -2\"")
    b.add_argument("sub", choices=["perm", "pure", "classify", "crossings", "simplify", "reduce"])
    b.add_argument("-n", type=int, required=True, help="number of strands")
    b.add_argument("word")
    b.set_defaults(func=_braid)

    c = sub.add_parser("closure", help="print the PD code of a braid closure")
    c.add_argument("-n", type=int, required=True, help="number of strands")
    c.add_argument("word")
    c.set_defaults(func=_closure)

    i = sub.add_parser("invariants", help="Conway and Jones polynomials")
    i.add_argument("-n", type=int, help="number of strands")
    i.add_argument("word", nargs="?")
    i.add_argument("--pd", metavar="FILE", help="read a PD file instead of a braid")
    i.add_argument("--json", action="store_true")
    i.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    i.set_defaults(func=_invariants)

    k = sub.add_parser("blanket", help="statistics and analysis of the blanket")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=_blanket)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (CliError, ValueError) as exc:
        print(f"braidknot: error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
