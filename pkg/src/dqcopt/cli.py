"""Command-line front end.

Exit codes: 0 success, 1 parse or validation error, 2 a size cap was exceeded,
3 verification failed.
"""

from __future__ import annotations

import argparse
import sys

from .circuits import global_gates, validate
from .commute import CommuteMode
from .oracle import OracleBudgetError, brute_force_min, verify_schedule
from .search import DEFAULT_MAX_GLOBAL, ConfigSpaceError, optimize
from .textio import CircuitDocument, ParseError, format_event_sequence, parse_circuit, render_report

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dqcopt",
        description="Minimize qubit teleportations for a circuit split across two partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mode(p: argparse.ArgumentParser) -> None:
        p.add_argument("--mode", choices=["strict", "paper"], default="strict",
                       help="commutation rule set (default: strict)")

    opt = sub.add_parser("optimize", help="search all site configurations for the fewest teleports")
    opt.add_argument("file", help="circuit document")
    add_mode(opt)
    opt.add_argument("--all-configs", action="store_true",
                     help="print every configuration row, not just the best")
    opt.add_argument("--output", choices=["table", "machine"], default="table",
                     help="report format (default: table)")
    opt.add_argument("--max-global", type=int, default=DEFAULT_MAX_GLOBAL,
                     help=f"cap on global gates, search is 2^m_g (default: {DEFAULT_MAX_GLOBAL})")
    opt.add_argument("--verify", action="store_true",
                     help="check that the best schedule preserves the circuit unitary")
    opt.add_argument("--no-final-return", action="store_true",
                     help="do not count the last return teleport (experimental accounting)")

    chk = sub.add_parser("check", help="parse and validate a circuit document")
    chk.add_argument("file")

    orc = sub.add_parser("oracle", help="exhaustive minimum for desk-scale circuits")
    orc.add_argument("file")
    add_mode(orc)
    orc.add_argument("--limit", type=int, default=1_000_000,
                     help="explored-state budget (default: 1000000)")

    return parser


def _load(path: str) -> CircuitDocument | int:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        doc = parse_circuit(text)
    except ParseError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    violations = validate(doc.circuit)
    if violations:
        for v in violations:
            where = f"gate {v.gate_id}" if v.gate_id is not None else "circuit"
            print(f"error: {path}: {where}: {v.message}", file=sys.stderr)
        return EXIT_INVALID
    return doc


def _mode_of(args: argparse.Namespace) -> CommuteMode:
    return CommuteMode.STRICT if args.mode == "strict" else CommuteMode.PERMISSIVE


def _cmd_optimize(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    if isinstance(doc, int):
        return doc
    try:
        report = optimize(doc.circuit, mode=_mode_of(args), max_global=args.max_global,
                          final_return=not args.no_final_return)
    except ConfigSpaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(render_report(report, args.output, all_configs=args.all_configs), end="")
    if args.verify:
        try:
            ok = verify_schedule(doc.circuit, report.best.result)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        if not ok:
            print(f"verification failed: executing config {report.best_index} in scheduled "
                  f"order changes the circuit unitary", file=sys.stderr)
            return EXIT_VERIFY
        print("verification: scheduled order preserves the circuit unitary (up to global phase)",
              file=sys.stderr)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    if isinstance(doc, int):
        return doc
    c = doc.circuit
    print(f"ok: {c.size} gates ({len(global_gates(c))} global) on "
          f"{c.partition_sizes[0]}+{c.partition_sizes[1]} qubits")
    return EXIT_OK


def _cmd_oracle(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    if isinstance(doc, int):
        return doc
    try:
        result = brute_force_min(doc.circuit, mode=_mode_of(args), limit=args.limit)
    except (ValueError, OracleBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    print(f"oracle minimum: {result.min_n_t}")
    print(f"witness: {format_event_sequence(result.witness_schedule.events)}")
    print(f"explored states: {result.explored_states}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "optimize":
        return _cmd_optimize(args)
    if args.command == "check":
        return _cmd_check(args)
    return _cmd_oracle(args)


run_cli = main


if __name__ == "__main__":
    sys.exit(main())
