"""Command line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import presentations
from .forest import canonical_word_pi
from .fractions import canonical_word_hat, elements_equal, eval_pi_word
from .pattern import example_pattern, pattern_of_word
from .pimonoid import lclm_report
from .render import render_pattern
from .twov import canonical_word_2v, eval_word, in_two_v
from .words import PI, TWO_V, ParseError, parse_word

GROUPS = ("pi", "2vhat", "2v")


class UsageError(Exception):
    pass


def default_bound() -> int:
    raw = os.environ.get("BRIN2V_BOUND", "6")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"BRIN2V_BOUND must be an integer, got {raw!r}") from None


def _word(text: str, group: str):
    try:
        w = parse_word(text, TWO_V if group == "2v" else PI)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if group == "pi" and not w.is_positive:
        raise UsageError("pi words are positive; use --group 2vhat for inverses")
    return w


def _element(text: str, group: str):
    w = _word(text, group)
    if group == "pi":
        return pattern_of_word(w)
    if group == "2vhat":
        return eval_pi_word(w)
    return eval_word(w)


def cmd_eval(args, out):
    e = _element(args.word, args.group)
    data = e.to_json()
    if args.group == "2v":
        data = {"pair": data, "in_2v": in_two_v(e)}
    out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_normalize(args, out):
    e = _element(args.word, args.group)
    if args.group == "pi":
        w = canonical_word_pi(e)
    elif args.group == "2vhat":
        w = canonical_word_hat(e)
    else:
        w = canonical_word_2v(e).word()
    out.write(f"{w}\n")
    return 0


def cmd_equal(args, out):
    a, b = _element(args.first, args.group), _element(args.second, args.group)
    same = a == b if args.group == "pi" else elements_equal(a, b)
    out.write("true\n" if same else "false\n")
    return 0


def cmd_verify(args, out):
    bound = args.bound if args.bound is not None else default_bound()
    ids = args.family or list(presentations.TABLE_IDS)
    for fam in ids:
        if fam not in presentations.TABLE_IDS:
            raise UsageError(f"unknown family {fam!r}; choose from {', '.join(presentations.TABLE_IDS)}")
    reports = [(fam, presentations.run_family(fam, bound)) for fam in ids]
    ok = all(r.passed for _, r in reports)
    if args.json:
        payload = {"bound": bound, "passed": ok, "reports": {fam: r.to_json() for fam, r in reports}}
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for _, r in reports:
            out.write(r.text() + "\n")
        out.write("ALL PASS\n" if ok else "FAILURES\n")
    return 0 if ok else 1


def cmd_lclm(args, out):
    rep = lclm_report(args.bound)
    if args.json:
        out.write(json.dumps(rep.to_json(), indent=2, sort_keys=True) + "\n")
    else:
        out.write(rep.text() + "\n")
    return 0 if rep.passed else 1


def cmd_render(args, out):
    if args.word is None:
        p = example_pattern()
    else:
        p = pattern_of_word(_word(args.word, "pi"))
    if args.squares < 1:
        raise UsageError("--squares must be at least 1")
    svg = render_pattern(p, args.squares)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        out.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hdthompson", description="Words, patterns and the groups 2V-hat and 2V.")
    sub = ap.add_subparsers(dest="command", required=True)

    def group_opt(p):
        p.add_argument("--group", choices=GROUPS, default="pi")

    p = sub.add_parser("eval", help="print the pattern or pattern pair of a word as JSON")
    group_opt(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("normalize", help="print the canonical word")
    group_opt(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", help="compare two words")
    group_opt(p)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("verify", help="check relation tables")
    p.add_argument("--family", action="append", help="table id (repeatable); default all")
    p.add_argument("--bound", type=int, default=None, help="index bound (default BRIN2V_BOUND or 6)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lclm", help="common left multiples of v0 and h0 s1")
    p.add_argument("--bound", type=int, default=None,
                   help="surplus bound for the search (default BRIN2V_LCLM_BOUND or 4)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_lclm)

    p = sub.add_parser("render", help="SVG of a pattern (default: the ten-rectangle example)")
    p.add_argument("word", nargs="?")
    p.add_argument("--squares", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
