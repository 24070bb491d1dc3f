"""Command-line front end.

Thin adapters only: every subcommand calls straight into the library.
Exit status 0 on success / all-pass, 1 on verification failure, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijection, identities, sequences
from .core import InvalidTilingError, decompose, enumerate_tilings, validate
from .render import RenderSpec, render

_FILTERS = ("none", "no-bifence", "no-free-bifence", "odd-metatiles")


def _filter_predicate(name):
    from .core import has_bifence, has_even_metatile, has_free_bifence

    if name == "none":
        return None
    if name == "no-bifence":
        return lambda t: not has_bifence(t)
    if name == "no-free-bifence":
        return lambda t: not has_free_bifence(t)
    return lambda t: not has_even_metatile(t)  # odd-metatiles


def _cmd_count(args) -> int:
    if args.seq == "hsq":
        value = sequences.count_halfsquare_square(args.n)
    else:
        value = sequences.TABLES[args.seq].value(args.n)
    print(value)
    return 0


def _cmd_enumerate(args) -> int:
    predicate = _filter_predicate(args.filter)
    emitted = 0
    for t in enumerate_tilings(args.n, predicate):
        if args.limit is not None and emitted >= args.limit:
            break
        if args.format == "jsonl":
            record = {
                "n": args.n,
                "encoding": t.encoding,
                "metatiles": [o.encoding for o in decompose(t)],
            }
            print(json.dumps(record))
        else:
            print(t.encoding)
        emitted += 1
    return 0


def _cmd_decompose(args) -> int:
    try:
        t = validate(args.encoding)
    except InvalidTilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for occurrence in decompose(t):
        print(occurrence.encoding)
    return 0


def _cmd_verify(args) -> int:
    if args.identity == "all":
        reports = identities.verify_all(args.max_n, args.combinatorial)
    else:
        ident = int(args.identity)
        reports = [identities.verify(ident, args.max_n)]
        if args.combinatorial and ident in (2, 3, 4, 5, 6):
            reports.append(identities.verify(ident, args.max_n, combinatorial=True))
    ok = True
    for report in reports:
        print(report.table())
        ok = ok and report.all_pass
    print("all pass" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_bijection(args) -> int:
    n = args.n
    if args.audit:
        audit = bijection.cassini_audit(n)
        print(
            f"n={audit.n} lhs={audit.lhs} rhs={audit.rhs} "
            f"exceptions={audit.exception_count} on {audit.exception_side} side"
        )
        print("balanced" if audit.balanced else "UNBALANCED")
        return 0 if audit.balanced else 1
    for t in enumerate_tilings(n):
        ci = bijection.cassini_partition(t)
        if ci.exception is not None:
            print(f"{t.encoding} -> {ci.exception.value}")
        else:
            print(
                f"{t.encoding} -> copy {ci.target_copy.value} "
                f"{ci.image.encoding}"
            )
    for u in enumerate_tilings(n - 2):
        if "h" in u.encoding:
            print(
                f"{u.encoding} -> copy {bijection.TargetCopy.THIRD.value} "
                f"{bijection.b_inverse(u).encoding} (companion)"
            )
        else:
            print(f"{u.encoding} -> {bijection.AllBifenceException.SOURCE.value}")
    return 0


def _cmd_render(args) -> int:
    try:
        t = validate(args.encoding)
    except InvalidTilingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(t, RenderSpec(format=args.format))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fencetiles",
        description="Tilings of n-boards by half-squares and half-gap fences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="evaluate a sequence value")
    p.add_argument("--seq", required=True, choices=["fib", "A", "S", "C", "T", "hsq"])
    p.add_argument("--n", required=True, type=int)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate", help="stream tilings of an n-board")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--filter", default="none", choices=sorted(_FILTERS))
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--format", default="text", choices=["text", "jsonl"])
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("decompose", help="split an encoding into metatiles")
    p.add_argument("encoding")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="check the identities")
    p.add_argument(
        "--identity",
        required=True,
        choices=[str(i) for i in range(1, 8)] + ["all"],
    )
    p.add_argument("--max-n", required=True, type=int)
    p.add_argument("--combinatorial", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bijection", help="print or audit the near-bijection")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--audit", action="store_true")
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("render", help="draw a tiling")
    p.add_argument("encoding")
    p.add_argument("--format", default="ascii", choices=["ascii", "svg"])
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
