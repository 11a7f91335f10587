"""Command-line front end.

Exit codes: 0 all checks pass / output produced, 1 a check failed,
2 usage or parse error, 3 a search budget was exhausted.
"""

from __future__ import annotations

import argparse
import sys

from .algebra import GroupWord
from .automata import DEFAULT_MAX_TUPLES, Vertex
from .baumslag import build_machine
from .dehn import (
    DEFAULT_MAX_AREA,
    DEFAULT_MAX_LEN,
    area_oracle,
    area_strategy,
    format_growth_table,
    growth_table,
    is_relation,
)
from .errors import AreaBudgetExceeded, FormatError, SearchBudgetExceeded
from .formats import parse_machine, parse_table, serialize_machine, serialize_table
from .rn import RNElement, iota, verify_sigma_identity
from .verify import DEFAULT_PAIRS, DEFAULT_VERIFY_TUPLES, run_verification


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_machine(path: str):
    with open(path) as fh:
        return parse_machine(fh.read())


def _load_table(path: str, machine) -> RNElement:
    with open(path) as fh:
        element = parse_table(fh.read(), machine)
    ok, diag = element.validate()
    if not ok:
        raise FormatError(f"{path}: {diag}")
    return element


def _cmd_gen_bs(args) -> int:
    machine = build_machine(args.n)
    if args.persistent:
        machine = machine.extend_persistent()
    _write(serialize_machine(machine), args.output)
    return 0


def _cmd_verify(args) -> int:
    machine = _load_machine(args.machine)
    report = run_verification(
        machine,
        args.n,
        seed=args.seed,
        pairs=args.pairs,
        max_tuples=args.max_tuples,
    )
    print(report.render())
    return 0 if report.passed else 1


def _cmd_rn(args) -> int:
    machine = _load_machine(args.machine)
    if args.action == "compose":
        left = _load_table(args.elements[0], machine)
        right = _load_table(args.elements[1], machine)
        _write(serialize_table(left * right), args.output)
        return 0
    if args.action == "invert":
        element = _load_table(args.elements[0], machine)
        _write(serialize_table(~element), args.output)
        return 0
    if args.action == "equal":
        left = _load_table(args.elements[0], machine)
        right = _load_table(args.elements[1], machine)
        equal = left.equals(right, args.max_tuples)
        print("equal" if equal else "not equal")
        return 0 if equal else 1
    if args.action == "iota":
        prefix = Vertex.parse(machine.arity, args.prefix)
        element = _load_table(args.elements[0], machine)
        _write(serialize_table(iota(prefix, element)), args.output)
        return 0
    if args.action == "sigma-check":
        if args.state not in machine.states:
            raise FormatError(f"unknown state {args.state!r}")
        holds = verify_sigma_identity(machine.state(args.state), args.max_tuples)
        print(f"sigma identity for {args.state}: " + ("holds" if holds else "FAILS"))
        return 0 if holds else 1
    raise AssertionError(args.action)


def _cmd_dehn(args) -> int:
    if args.action == "table":
        rows = growth_table(args.n, args.k_max)
        sys.stdout.write(format_growth_table(rows, args.format))
        return 0
    if args.action == "strategy":
        print(area_strategy(args.k, args.n).area)
        return 0
    if args.action == "area":
        w = GroupWord.parse(args.word)
        if not is_relation(w, args.n):
            raise FormatError(f"{w} is not a relation in BS(1,{args.n})")
        result = area_oracle(w, args.n, max_area=args.max_area, max_len=args.max_len)
        suffix = "" if result.exact else " (upper bound: length cap pruned the search)"
        print(f"{result.area}{suffix}")
        return 0
    raise AssertionError(args.action)


def _positive_n(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="selfsim",
        description="Self-similar group machines, prefix tables, and the Dehn-area lab.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen-bs", help="emit the canonical BS(1,n) machine file")
    gen.add_argument("n", type=_positive_n)
    gen.add_argument("--persistent", action="store_true",
                     help="extend by one letter so every state is its own last section")
    gen.add_argument("--output", "-o")
    gen.set_defaults(func=_cmd_gen_bs)

    ver = sub.add_parser("verify", help="run the property suite on a machine file")
    ver.add_argument("machine")
    ver.add_argument("--n", type=_positive_n, required=True)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    ver.add_argument("--max-tuples", type=int, default=DEFAULT_VERIFY_TUPLES)
    ver.set_defaults(func=_cmd_verify)

    rn = sub.add_parser("rn", help="prefix-replacement table arithmetic")
    rn.add_argument("action", choices=["compose", "invert", "equal", "iota", "sigma-check"])
    rn.add_argument("elements", nargs="*", help="table files")
    rn.add_argument("--machine", required=True)
    rn.add_argument("--prefix", help="target cone for iota, as a digit string")
    rn.add_argument("--state", help="machine state for sigma-check")
    rn.add_argument("--max-tuples", type=int, default=DEFAULT_MAX_TUPLES)
    rn.add_argument("--output", "-o")
    rn.set_defaults(func=_cmd_rn)

    dehn = sub.add_parser("dehn", help="relation lengths and areas")
    dehn.add_argument("action", choices=["table", "area", "strategy"])
    dehn.add_argument("--n", type=_positive_n, required=True)
    dehn.add_argument("--k", type=int, help="witness index for strategy")
    dehn.add_argument("--k-max", type=int, help="last row of the growth table")
    dehn.add_argument("--word", help="relation to fill, e.g. \"a b a' b' b'\"")
    dehn.add_argument("--max-area", type=int, default=DEFAULT_MAX_AREA)
    dehn.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    dehn.add_argument("--format", choices=["text", "csv"], default="text")
    dehn.set_defaults(func=_cmd_dehn)

    return parser


def _validate_args(parser: argparse.ArgumentParser, args) -> None:
    if args.command == "rn":
        wanted = {"compose": 2, "invert": 1, "equal": 2, "iota": 1, "sigma-check": 0}
        if len(args.elements) != wanted[args.action]:
            parser.error(f"rn {args.action} takes {wanted[args.action]} table file(s)")
        if args.action == "iota" and not args.prefix:
            parser.error("rn iota needs --prefix")
        if args.action == "sigma-check" and not args.state:
            parser.error("rn sigma-check needs --state")
    if args.command == "dehn":
        if args.action == "table" and args.k_max is None:
            parser.error("dehn table needs --k-max")
        if args.action == "strategy" and args.k is None:
            parser.error("dehn strategy needs --k")
        if args.action == "area" and args.word is None:
            parser.error("dehn area needs --word")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate_args(parser, args)
    try:
        return args.func(args)
    except (FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SearchBudgetExceeded, AreaBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
