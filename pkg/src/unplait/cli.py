"""Command-line surface for the braid triviality pipeline.

Exit codes: 0 for a trivial braid (or equal words / all batch verdicts
matching), 1 for a nontrivial braid (or unequal words / a batch mismatch),
2 for any input error (syntax, range, non-pure braid, bad arguments).

The environment variable BRAID_MAX_LETTERS (default 100000) caps the size of
any parsed word, counting group expansions.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .braidtext import ParseError, bundled_fixtures, load_fixtures, parse, serialize
from .garside import NormalForm, equals, normal_form
from .generators import belt_element, flip, full_twist, ribbon_flip
from .triviality import (
    classify,
    is_topologically_trivial,
    remove_last_strand,
    straighten,
)
from .words import BraidWord, permutation

__all__ = ["main", "build_parser"]


def _max_letters() -> int | None:
    raw = os.environ.get("BRAID_MAX_LETTERS", "100000")
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"BRAID_MAX_LETTERS must be an integer, got {raw!r}") from None
    return value if value > 0 else None


def _parse_pure(text: str) -> BraidWord:
    braid = parse(text, max_letters=_max_letters())
    perm = permutation(braid)
    if not perm.is_identity():
        raise ValueError(f"not a pure braid (permutation {list(perm.image)})")
    return braid


def _nf_text(nf: NormalForm) -> str:
    if nf.is_identity():
        return "identity"
    parts = [f"D^{nf.inf}"]
    parts.extend("(" + " ".join(str(v) for v in f.image) + ")" for f in nf.factors)
    return " ".join(parts)


def _flip_text(signed_index: int) -> str:
    return f"r_{abs(signed_index)}" + ("^-1" if signed_index < 0 else "")


def _cmd_check(args: argparse.Namespace) -> int:
    report = is_topologically_trivial(_parse_pure(args.braid))
    if args.json:
        print(json.dumps(report.to_json()))
    elif report.trivial:
        print(f"trivial (full twist power {report.twist_power})")
    else:
        print(f"nontrivial (class representative: {_nf_text(report.class_rep)})")
    return 0 if report.trivial else 1


def _cmd_straighten(args: argparse.Namespace) -> int:
    braid = _parse_pure(args.braid)
    trace = straighten(braid)
    for mark in trace.marks:
        letter = braid.letters[mark.letter_index]
        name = f"sigma_{letter.index}" + ("^-1" if letter.sign < 0 else "")
        print(
            f"mark: letter {mark.letter_index} ({name}), strand at position "
            f"{mark.strand_position}, insert {_flip_text(mark.flip)}"
        )
    print(f"s(b)  = {serialize(trace.output)}")
    print(f"s'(b) = {serialize(remove_last_strand(trace.output))}")
    return 0


def _cmd_nf(args: argparse.Namespace) -> int:
    nf = normal_form(parse(args.braid, max_letters=_max_letters()))
    print(json.dumps(nf.to_json()) if args.json else _nf_text(nf))
    return 0


def _cmd_eq(args: argparse.Namespace) -> int:
    limit = _max_letters()
    a = parse(args.left, max_letters=limit)
    b = parse(args.right, max_letters=limit)
    if equals(a, b):
        print("equal")
        return 0
    print("not equal")
    return 1


def _cmd_classify(args: argparse.Namespace) -> int:
    rep = classify(_parse_pure(args.braid))
    print(json.dumps(rep.to_json()))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    values = args.args
    expected = {"d": 1, "r": 2, "b": 2, "R": 2}[kind]
    if len(values) != expected:
        raise ValueError(f"gen {kind} takes {expected} integer argument(s)")
    if kind == "d":
        word = full_twist(values[0])
    elif kind == "r":
        word = flip(values[0], values[1])
    elif kind == "b":
        word = belt_element(values[0], values[1])
    else:
        word = ribbon_flip(values[0], values[1])
    print(serialize(word))
    return 0


def _cmd_batch(args: argparse.Namespace) -> int:
    fixtures = load_fixtures(args.file) if args.file else bundled_fixtures()
    failures = 0
    for fixture in sorted(fixtures, key=lambda f: f.name):
        report = is_topologically_trivial(_parse_pure(fixture.text))
        ok = report.trivial == fixture.expected_trivial
        failures += 0 if ok else 1
        print(
            f"{fixture.name}: {'PASS' if ok else 'FAIL'} "
            f"(trivial={report.trivial}, expected={fixture.expected_trivial})"
        )
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unplait",
        description="Decide whether a pure braid unplaits with both ends tied together.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="decide triviality of a pure braid")
    check.add_argument("braid", help='braid text, e.g. "B5: (3 4 -2 -1)^5"')
    check.add_argument("--json", action="store_true", help="emit the report as JSON")
    check.set_defaults(func=_cmd_check)

    straighten_cmd = sub.add_parser(
        "straighten", help="show marked letters, inserted flips, s(b) and s'(b)"
    )
    straighten_cmd.add_argument("braid")
    straighten_cmd.set_defaults(func=_cmd_straighten)

    nf = sub.add_parser("nf", help="print the canonical form of a word")
    nf.add_argument("braid")
    nf.add_argument("--json", action="store_true")
    nf.set_defaults(func=_cmd_nf)

    eq = sub.add_parser("eq", help="test two words for braid equality")
    eq.add_argument("left")
    eq.add_argument("right")
    eq.set_defaults(func=_cmd_eq)

    gen = sub.add_parser("gen", help="emit a generator word: d n | r i n | b k n | R i m")
    gen.add_argument("kind", choices=["d", "r", "b", "R"])
    gen.add_argument("args", type=int, nargs="+")
    gen.set_defaults(func=_cmd_gen)

    classify_cmd = sub.add_parser(
        "classify", help="print the canonical class representative as JSON"
    )
    classify_cmd.add_argument("braid")
    classify_cmd.set_defaults(func=_cmd_classify)

    batch = sub.add_parser("batch", help="run a fixture corpus and verify verdicts")
    batch.add_argument("file", nargs="?", help="fixture file (default: bundled corpus)")
    batch.set_defaults(func=_cmd_batch)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
