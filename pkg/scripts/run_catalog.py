#!/usr/bin/env python3
"""Run every theorem over the built-in catalog and print a status grid."""

import argparse
import collections
import dataclasses
import time

from skewlab import harness
from skewlab.properties import Bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--D", type=int, default=2)
    ap.add_argument("--N", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bounds = dataclasses.replace(Bounds(), D=args.D, N=args.N, seed=args.seed)

    t0 = time.perf_counter()
    entries = harness.load_catalog(bounds)
    short = {harness.CONFIRMED: "ok", harness.NOT_MET: "--", harness.VIOLATION: "VIOL"}
    width = max(len(e.name) for e in entries)
    print(" " * width + "".join(f"{t:>10}" for t in harness.THEOREM_IDS))
    tally = collections.Counter()
    violations = []
    for e in entries:
        cells = []
        for tid in harness.THEOREM_IDS:
            r = harness.verify_theorem(tid, e, bounds)
            tally[r.status] += 1
            cells.append(short[r.status])
            if r.status == harness.VIOLATION:
                violations.append((r, e))
        print(f"{e.name:<{width}}" + "".join(f"{c:>10}" for c in cells))

    print(f"\n{dict(tally)}  ({time.perf_counter() - t0:.1f}s, D={args.D} N={args.N})")
    for r, e in violations:
        print(f"\n{r}\n  replays: {harness.replay_report(r, e)}")


if __name__ == "__main__":
    main()
