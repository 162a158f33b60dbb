#!/usr/bin/env python3
"""Search the small-ring family for each separating example and replay the witnesses."""

import argparse

from skewlab import harness
from skewlab.properties import replay


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--all", action="store_true", help="list every hit, not just the first")
    args = ap.parse_args()
    for name, hits in harness.separation_witnesses().items():
        holds, fails, max_order = harness.SEPARATIONS[name]
        print(f"{name}  (P={','.join(holds)}, Q={fails}, |R| <= {max_order}): {len(hits)} hit(s)")
        for h in hits if args.all else hits[:1]:
            print(f"  {h}  replays={replay(h.fails, h.ring, h.sigma)}")


if __name__ == "__main__":
    main()
