#!/usr/bin/env python3
"""Measure how often the greedy scheduler attains the exhaustive minimum.

Draws a seeded corpus of random two-partition circuits, runs the greedy
scheduler for every configuration of each, and compares against the
exhaustive oracle. Prints aggregate agreement plus every circuit where the
greedy best falls short, serialized so a case can be replayed by hand.
"""

import argparse
import sys

from dqcopt import (CommuteMode, brute_force_min, config_min_teleports,
                    format_event_sequence, global_gates, optimize,
                    random_corpus, serialize_circuit)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20250817)
    parser.add_argument("--count", type=int, default=200, help="circuits to draw")
    parser.add_argument("--mode", choices=[m.value for m in CommuteMode],
                        default=CommuteMode.STRICT.value)
    args = parser.parse_args(argv)

    mode = CommuteMode(args.mode)
    corpus = random_corpus(args.seed, args.count)
    best_hits = 0
    config_hits = 0
    config_runs = 0
    gaps = []
    for i, circuit in enumerate(corpus):
        exact = brute_force_min(circuit, mode)
        report = optimize(circuit, mode=mode)
        m_g = len(global_gates(circuit))
        for oc in report.per_config:
            per_cfg = config_min_teleports(circuit, oc.cfg, mode).min_n_t
            config_hits += oc.result.n_t == per_cfg
            config_runs += 1
        if report.best_n_t == exact.min_n_t:
            best_hits += 1
        else:
            gaps.append((i, circuit, report, exact, m_g))

    print(f"seed {args.seed}, {args.count} circuits, mode {mode.value}")
    print(f"greedy best == exhaustive best: {best_hits}/{args.count} "
          f"({100.0 * best_hits / args.count:.1f}%)")
    print(f"greedy == exhaustive per configuration: {config_hits}/{config_runs} "
          f"({100.0 * config_hits / config_runs:.1f}%)")
    if not gaps:
        print("no counterexamples")
        return 0

    print(f"\n{len(gaps)} counterexample(s):")
    for i, circuit, report, exact, m_g in gaps:
        print(f"\n--- circuit {i}: greedy best {report.best_n_t} "
              f"(config {report.best_index} of {1 << m_g}), exhaustive {exact.min_n_t}")
        witness = format_event_sequence(exact.witness_schedule.events)
        print(f"    oracle witness: {witness}")
        print("    " + serialize_circuit(circuit).rstrip().replace("\n", "\n    "))
    return 0


if __name__ == "__main__":
    sys.exit(main())
