#!/usr/bin/env python3
"""Run the oracle equivalence sweep and print a profile of the verdicts.

    python scripts/run_sweep.py [-d MAX_SOCLE_DEGREE]

Beyond the agreement check (which the CLI `burch sweep` also performs), this
prints how the Burch ideals distribute over length and type, which is handy
when hunting for small examples with prescribed invariants.
"""
import argparse
import collections
import time

from burchlab.sweep import run_sweep


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("-d", "--max-socle-degree", type=int, default=5)
    args = ap.parse_args()
    start = time.monotonic()
    result = run_sweep(args.max_socle_degree)
    elapsed = time.monotonic() - start
    print(f"{result.count} ideals in {elapsed:.1f}s, {len(result.counterexamples)} disagreements")
    by_length = collections.Counter()
    burch_by_length = collections.Counter()
    for rec in result.records:
        by_length[rec.length] += 1
        if rec.burch:
            burch_by_length[rec.length] += 1
    print("length: total burch  (gorenstein-and-burch are hypersurfaces)")
    for n in sorted(by_length):
        print(f"{n:6d}: {by_length[n]:5d} {burch_by_length[n]:5d}")
    for rec in result.counterexamples:
        print("DISAGREEMENT", rec.staircase, rec.verdicts)
    return 0 if not result.counterexamples else 4


if __name__ == "__main__":
    raise SystemExit(main())
