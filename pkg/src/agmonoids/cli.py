"""Command-line driver: ``agmonoids <subcommand> ...``.

Exit status is 0 on success, 1 when the input is mathematically unsuitable or
a file cannot be read, and 2 for invalid arguments.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Sequence

from . import enumeration
from .automorphisms import automorphism_group, conjugacy_classes_of_involutions, involutions
from .core import (
    AlgebraError,
    CayleyTable,
    is_associative,
    is_commutative,
    is_left_invertive,
    is_medial,
    left_identities,
    satisfies_paramedial_swap,
    two_sided_identity,
)
from .storage import (
    CycleNotationError,
    TableDatabase,
    format_cycle_notation,
    parse_cycle_notation,
    read_db,
    write_db,
    encode_table,
)
from .twist import NotAGMonoidError, NotAnAutomorphismError, TwistPair, twist, untwist

LONG_ORDER = 8


class _ProgressPrinter:
    def __init__(self, interval: float = 1.0):
        self.interval = interval
        self.last = 0.0

    def __call__(self, nodes: int, found: int) -> None:
        now = time.monotonic()
        if now - self.last >= self.interval:
            self.last = now
            print(f"progress nodes={nodes} found={found}", file=sys.stderr)


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}") from None
    if not 1 <= n <= enumeration.MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order must be in 1..{enumeration.MAX_ORDER}")
    return n


def _workers(text: str) -> int:
    try:
        w = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid worker count {text!r}") from None
    if w < 1:
        raise argparse.ArgumentTypeError("worker count must be >= 1")
    return w


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agmonoids",
        description="Enumerate commutative monoids and AG-monoids up to isomorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--in", dest="input", required=True,
                       help="AGMON file holding one table ('-' for stdin)")

    p = sub.add_parser("enumerate", help="enumerate structures of one order")
    p.add_argument("--order", "-n", type=_order, required=True)
    p.add_argument("--kind", choices=["cm", "ag"], required=True)
    p.add_argument("--include-associative", action="store_true",
                   help="with --kind ag, also emit the associative (commutative) ones")
    p.add_argument("--out", help="write an AGMON database here")
    p.add_argument("--workers", type=_workers, default=None)
    p.add_argument("--allow-long", action="store_true", help=f"permit order >= {LONG_ORDER}")

    p = sub.add_parser("twist", help="twist a commutative monoid by an involutive automorphism")
    add_input(p)
    p.add_argument("--alpha", required=True, help='cycle notation, e.g. "(1,5)(2,4)" or "()"')

    p = sub.add_parser("untwist", help="recover the monoid and automorphism of an AG-monoid")
    add_input(p)

    p = sub.add_parser("verify", help="report algebraic properties of a table")
    add_input(p)

    p = sub.add_parser("table1", help="count structures for orders 1..max-order")
    p.add_argument("--max-order", type=_order, required=True)
    p.add_argument("--workers", type=_workers, default=None)
    p.add_argument("--allow-long", action="store_true", help=f"permit order >= {LONG_ORDER}")

    p = sub.add_parser("autgroup", help="list the automorphism group and its involution classes")
    add_input(p)
    return parser


def _read_single(path: str) -> CayleyTable:
    db = read_db(sys.stdin if path == "-" else path)
    if db.count != 1:
        raise AlgebraError(f"expected exactly one table, found {db.count}")
    return db.tables[0]


def _fmt(result) -> str:
    if result:
        return "true"
    return "false witness=(" + ",".join(map(str, result.witness)) + ")"


def cmd_enumerate(args) -> int:
    n = args.order
    workers = args.workers or enumeration.default_workers()
    progress = _ProgressPrinter()
    if args.kind == "cm":
        result = enumeration.enumerate_commutative_monoids(n, workers=workers, progress=progress)
    else:
        result = enumeration.enumerate_ag_monoids_via_construction(
            n, args.include_associative, workers=workers, progress=progress
        )
    if args.out:
        write_db(TableDatabase(n, result.kind, result.tables), args.out)
    print(f"order={n} kind={result.kind.value} count={result.count}")
    return 0


def cmd_twist(args, parser) -> int:
    m = _read_single(args.input)
    try:
        alpha = parse_cycle_notation(args.alpha, m.order)
    except CycleNotationError as exc:
        parser.error(f"--alpha: {exc}")
    try:
        pair = TwistPair(m, alpha)
    except NotAnAutomorphismError:
        print(f"error: {alpha} is not an automorphism of the monoid", file=sys.stderr)
        return 1
    print(encode_table(twist(pair)))
    return 0


def cmd_untwist(args) -> int:
    t = _read_single(args.input)
    try:
        pair = untwist(t)
    except NotAGMonoidError as exc:
        print(f"error: not an AG-monoid ({exc})", file=sys.stderr)
        return 1
    print(encode_table(pair.monoid))
    print(format_cycle_notation(pair.alpha))
    return 0


def cmd_verify(args) -> int:
    t = _read_single(args.input)
    idents = sorted(left_identities(t))
    two = two_sided_identity(t)
    print(f"associative: {_fmt(is_associative(t))}")
    print(f"commutative: {_fmt(is_commutative(t))}")
    print(f"left-invertive: {_fmt(is_left_invertive(t))}")
    print(f"medial: {_fmt(is_medial(t))}")
    print(f"paramedial-swap: {_fmt(satisfies_paramedial_swap(t))}")
    print("left-identities: " + (",".join(map(str, idents)) if idents else "none"))
    print(f"two-sided-identity: {'none' if two is None else two}")
    return 0


def cmd_table1(args) -> int:
    workers = args.workers or enumeration.default_workers()
    print("order commutative_monoids nonassociative_ag_monoids total")
    for n in range(1, args.max_order + 1):
        cm, nonassoc, total = enumeration.table1_row(n, workers=workers)
        print(f"{n} {cm} {nonassoc} {total}")
        sys.stdout.flush()
    return 0


def cmd_autgroup(args) -> int:
    t = _read_single(args.input)
    g = automorphism_group(t)
    classes = conjugacy_classes_of_involutions(g)
    print(f"group_order={g.order}")
    print("members: " + " ".join(map(format_cycle_notation, g.members)))
    print("involutions: " + " ".join(map(format_cycle_notation, involutions(g))))
    print(f"classes={len(classes)}")
    for c in classes.classes:
        print(f"class {format_cycle_notation(c[0])} size={len(c)}")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    top = getattr(args, "order", None) or getattr(args, "max_order", None)
    if top is not None and top >= LONG_ORDER and not args.allow_long:
        parser.error(f"order {top} is a long-running job; pass --allow-long to run it")
    try:
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "twist":
            return cmd_twist(args, parser)
        if args.command == "untwist":
            return cmd_untwist(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table1":
            return cmd_table1(args)
        return cmd_autgroup(args)
    except (AlgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
