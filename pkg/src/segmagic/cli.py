"""Command-line front end.

Exit status: 0 success, 1 a requested property check failed, 2 usage or
parse error.  Squares are read from a file argument or standard input;
stdout carries data, stderr diagnostics.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dates, search, squares
from .squares import Category, InvalidDigitError, SquareParseError

_EXPECT_LEVELS = {
    "semi": Category.SEMI_MAGIC,
    "magic": Category.MAGIC,
    "pandiagonal": Category.PANDIAGONAL_MAGIC,
}


def _read_square(path: str | None) -> squares.Square:
    if path is None or path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    return squares.parse_square(text)


def _parse_transforms(text: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    for name in names:
        if name not in squares.ATOMIC_TRANSFORMS:
            raise ValueError(
                f"unknown transform {name!r}; choose from "
                + ", ".join(squares.ATOMIC_TRANSFORMS)
            )
    return names


def cmd_verify(args) -> int:
    square = _read_square(args.file)
    report = squares.classify(square)
    if args.json:
        print(json.dumps(squares.report_to_json(report)))
    else:
        print(squares.format_report(report))
    failed = []
    if args.expect and report.category < _EXPECT_LEVELS[args.expect]:
        failed.append(f"expected {args.expect}, got {report.category.label}")
    if args.constant is not None and report.constant != args.constant:
        failed.append(f"expected constant {args.constant}, got {report.constant}")
    for reason in failed:
        print(f"check failed: {reason}", file=sys.stderr)
    return 1 if failed else 0


def cmd_classify(args) -> int:
    square = _read_square(args.file)
    transforms = (
        _parse_transforms(args.transforms)
        if args.transforms
        else squares.ATOMIC_TRANSFORMS
    )
    report = squares.classify_universal(square, transforms)
    if args.json:
        print(json.dumps(squares.report_to_json(report)))
    else:
        print(squares.format_report(report))
    return 0


def cmd_transform(args) -> int:
    square = _read_square(args.file)
    try:
        image = squares.apply_transform(square, args.apply)
    except InvalidDigitError as err:
        print(str(err), file=sys.stderr)
        return 1
    print(squares.render(image))
    return 0


def cmd_search(args) -> int:
    alphabet = search.parse_alphabet(args.alphabet)
    query = search.SearchQuery(
        alphabet=alphabet,
        order=args.order if args.order else len(alphabet),
        requirement=_EXPECT_LEVELS[args.expect],
        universality=_parse_transforms(args.transforms) if args.transforms else (),
        dedup=args.dedup,
    )
    stream = search.enumerate_squares(query, jobs=args.jobs, via_latin=args.via_latin)
    count = _emit_squares(stream, args.jsonl, query.universality)
    print(f"{count} squares", file=sys.stderr)
    return 0


def cmd_palindromes(args) -> int:
    stream = search.enumerate_palindromic(
        search.parse_alphabet(args.alphabet), args.order, args.width
    )
    count = _emit_squares(stream, args.jsonl, ())
    print(f"{count} squares", file=sys.stderr)
    return 0


def _emit_squares(stream, jsonl: bool, transforms) -> int:
    count = 0
    for square in stream:
        if jsonl:
            record = squares.report_to_json(
                squares.classify_universal(square, transforms)
            )
            record["rows"] = [list(row) for row in square.rows]
            print(json.dumps(record))
        else:
            if count:
                print()
            print(squares.render(square))
        count += 1
    return count


def cmd_dates(args) -> int:
    found = dates.scan(
        dates.parse_date(args.start),
        dates.parse_date(args.end),
        args.alphabet,
        args.mode,
    )
    if args.json:
        print(json.dumps([dates.format_date(d) for d in found]))
    else:
        for day in found:
            print(dates.format_date(day))
    return 0


def cmd_render(args) -> int:
    square = _read_square(args.file)
    print(squares.render(square, args.style, args.border_label))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segmagic",
        description="Verify, transform and enumerate universal magic squares "
        "built from seven-segment digits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_square_arg(p):
        p.add_argument("file", nargs="?", help="square file (default: stdin)")

    p = sub.add_parser("verify", help="classify a square and check expectations")
    add_square_arg(p)
    p.add_argument("--expect", choices=sorted(_EXPECT_LEVELS))
    p.add_argument("--constant", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="classify plus universality verdicts")
    add_square_arg(p)
    p.add_argument("--transforms", help="comma-separated (default: all four)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("transform", help="apply transforms and print the image")
    add_square_arg(p)
    p.add_argument(
        "--apply",
        action="append",
        required=True,
        choices=squares.ATOMIC_TRANSFORMS,
        help="repeatable; applied left to right",
    )
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("search", help="enumerate combination squares")
    p.add_argument("--alphabet", required=True, help="digit string, e.g. 1258")
    p.add_argument("--order", type=int, help="default: alphabet size")
    p.add_argument("--expect", choices=sorted(_EXPECT_LEVELS), default="magic")
    p.add_argument("--transforms", help="universality filter, comma-separated")
    p.add_argument("--dedup", action="store_true", help="orbit-minimal squares only")
    p.add_argument("--via-latin", action="store_true", help="search Latin pairs")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--jsonl", action="store_true", help="one report per line")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("palindromes", help="enumerate palindromic semi-magic squares")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--jsonl", action="store_true")
    p.set_defaults(func=cmd_palindromes)

    p = sub.add_parser("dates", help="scan a date range for alphabet membership")
    p.add_argument("--alphabet", required=True)
    p.add_argument("--from", dest="start", required=True, metavar="DD.MM.YYYY")
    p.add_argument("--to", dest="end", required=True, metavar="DD.MM.YYYY")
    p.add_argument("--mode", choices=dates.MODES, default=dates.SUBSET_OF)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dates)

    p = sub.add_parser("render", help="print a square in another style")
    add_square_arg(p)
    p.add_argument(
        "--style",
        choices=("plain", "json", "sevenseg", "bordered"),
        default="plain",
    )
    p.add_argument("--border-label", help="frame cell for the bordered style")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SquareParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except FileNotFoundError as err:
        print(f"cannot read {err.filename}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
