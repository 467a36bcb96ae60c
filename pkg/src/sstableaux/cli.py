"""``tableaux`` command-line front end.

Exit status: 0 on success, 1 when the answer is "false" or the set is
empty, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import algorithms, enumeration, render
from .core import Composition, Partition, format_sequence, s_index, sort_to_partition
from .errors import NotDominating, ParseError, TableauxError
from .verify import run_all

COMMANDS = ("check", "greatest", "least", "fill", "floor-least", "enumerate", "kostka", "removable", "poset", "verify")
NEEDS_INPUT = set(COMMANDS) - {"verify"}

EXIT_OK, EXIT_FALSE, EXIT_INVALID = 0, 1, 2


def parse_sequence(text: str, partition: bool = False) -> Composition:
    """Parse ``4,4,1,1`` (or the empty string) into a composition or partition."""
    text = text.strip()
    if not text:
        return Partition() if partition else Composition()
    values = []
    for tok in text.split(","):
        if not tok.lstrip("-").isdigit():
            raise ParseError(f"malformed integer {tok!r} in {text!r}")
        value = int(tok)
        if value < 1:
            raise ParseError(f"part {value} in {text!r} is not positive")
        values.append(value)
    if partition and any(x < y for x, y in zip(values, values[1:])):
        raise ParseError(f"{text!r} is not a partition (parts must be non-increasing)")
    return Partition(values) if partition else Composition(values)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tableaux",
        description="Semistandard tableaux of shape mu and weight a.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--mu", help="shape, e.g. 4,4,1,1")
    parser.add_argument("--a", dest="a", help="weight composition, e.g. 1,3,2,2,2")
    parser.add_argument("--r", type=int, help="floor row for floor-least")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--dot", action="store_true", help="emit the Hasse diagram as DOT (poset only)")
    parser.add_argument("--trace", action="store_true", help="print the construction's step table")
    parser.add_argument("--max-n", type=int, default=7, help="largest n swept by verify (default 7)")
    parser.add_argument("--cap", type=int, default=enumeration.DEFAULT_CAP, help="enumeration size cap")
    return parser


class _Usage(Exception):
    pass


def _emit(text: str = "") -> None:
    print(text)


def _tableau_command(args, mu, a) -> int:
    if args.command == "greatest":
        tab, steps = algorithms.greatest_tableau_trace(mu, a)
        kind = "greatest"
    elif args.command == "fill":
        tab, steps = algorithms.removable_fill_tableau_trace(mu, a)
        kind = "fill"
    elif args.command == "least":
        tab, steps = algorithms.least_tableau_trace(mu, a)
        kind = "least"
    else:
        if args.r is None:
            raise _Usage("floor-least needs --r")
        tab, steps, _ = algorithms.least_tableau_with_floor_trace(mu, a, args.r)
        kind = "least"
    if args.json:
        if args.trace:
            _emit(json.dumps({"tableau": tab.to_dict(), "trace": render.trace_json(steps)}))
        else:
            _emit(tab.to_json())
        return EXIT_OK
    if args.trace:
        _emit(render.trace_table(kind, steps))
        _emit()
    _emit(tab.to_text())
    return EXIT_OK


def _check(args, mu, a) -> int:
    lam = sort_to_partition(a)
    ok = algorithms.is_nonempty(mu, a)
    if args.json:
        _emit(json.dumps({"nonempty": ok, "lambda": list(lam)}))
    elif ok:
        _emit(f"nonempty (mu dominates lambda(a)={format_sequence(lam)})")
    else:
        _emit(f"empty (mu does not dominate lambda(a)={format_sequence(lam)})")
    return EXIT_OK if ok else EXIT_FALSE


def _enumerate(args, mu, a) -> int:
    found = enumeration.enumerate_tableaux(mu, a, cap=args.cap)
    if args.json:
        _emit(json.dumps([t.to_dict() for t in found]))
    else:
        _emit("\n\n".join(t.to_text() for t in found))
    return EXIT_OK if found else EXIT_FALSE


def _kostka(args, mu, a) -> int:
    count = enumeration.kostka(mu, a, cap=args.cap)
    _emit(json.dumps({"kostka": count}) if args.json else str(count))
    return EXIT_OK


def _removable(args, mu, a) -> int:
    rows = algorithms.removable_set(mu, a)
    s = s_index(mu, a)
    if args.json:
        _emit(json.dumps({"R": rows, "l": rows[0], "s": s}))
    else:
        _emit(f"R(mu,a) = {{{', '.join(map(str, rows))}}}")
        _emit(f"l(mu,a) = {rows[0]}")
        _emit(f"s(mu,a) = {s}")
    return EXIT_OK


def _poset(args, mu, a) -> int:
    poset = enumeration.build_poset(mu, a, cap=args.cap)

    def label(idx):
        return None if idx is None else poset.elements[idx].label()

    summary = {
        "size": len(poset),
        "covers": len(poset.covers),
        "total_order": poset.is_total_order,
        "greatest": label(poset.greatest),
        "least": label(poset.least),
    }
    if args.json:
        payload = dict(summary)
        payload["elements"] = [t.to_dict() for t in poset.elements]
        payload["cover_pairs"] = [list(c) for c in poset.covers]
        if args.dot:
            payload["dot"] = enumeration.to_dot(poset)
        _emit(json.dumps(payload))
    else:
        lines = [f"{key}: {'' if val is None else val}".rstrip() for key, val in summary.items()]
        if args.dot:
            for line in lines:
                _emit(f"// {line}")
            _emit(enumeration.to_dot(poset))
        else:
            for line in lines:
                _emit(line)
    return EXIT_OK if len(poset) else EXIT_FALSE


def _verify(args) -> int:
    results = run_all(args.max_n)
    if args.json:
        _emit(json.dumps([r.__dict__ for r in results]))
    else:
        for r in results:
            _emit(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FALSE


HANDLERS = {
    "check": _check,
    "greatest": _tableau_command,
    "least": _tableau_command,
    "fill": _tableau_command,
    "floor-least": _tableau_command,
    "enumerate": _enumerate,
    "kostka": _kostka,
    "removable": _removable,
    "poset": _poset,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        if args.dot and args.command != "poset":
            raise _Usage("--dot applies only to poset")
        if args.command == "verify":
            return _verify(args)
        if args.mu is None or args.a is None:
            raise _Usage(f"{args.command} needs --mu and --a")
        mu = parse_sequence(args.mu, partition=True)
        a = parse_sequence(args.a)
        return HANDLERS[args.command](args, mu, a)
    except _Usage as exc:
        print(f"tableaux: UsageError: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotDominating as exc:
        print(f"tableaux: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except TableauxError as exc:
        print(f"tableaux: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
