#!/usr/bin/env python3
"""Rebuild the full configuration table for the bundled demo circuit."""

import argparse
import sys
from pathlib import Path

from dqcopt import CommuteMode, optimize, parse_circuit, render_report

DEFAULT_CIRCUIT = Path(__file__).resolve().parent.parent / "circuits" / "sample.dqc"


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("circuit", nargs="?", type=Path, default=DEFAULT_CIRCUIT,
                        help="circuit file (default: the bundled 9-gate demo)")
    parser.add_argument("--mode", choices=[m.value for m in CommuteMode],
                        default=CommuteMode.PERMISSIVE.value,
                        help="commutation rule set (default: %(default)s)")
    args = parser.parse_args(argv)

    doc = parse_circuit(args.circuit.read_text())
    report = optimize(doc.circuit, mode=CommuteMode(args.mode))
    print(render_report(report, all_configs=True))
    return 0


if __name__ == "__main__":
    sys.exit(main())
