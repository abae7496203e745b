#!/usr/bin/env python3
"""Randomized cross-check of the three deciders against the witness LP.

Samples (x, y, d) triples mixing guaranteed-positive instances (convex
combinations of polytope corners), trace-matched vectors and unconstrained
ones, and verifies that all four decision routes agree and every witness
satisfies its defining equations exactly.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from helpers import rand_majorized_point, rand_rvec, rand_trace_matched, rand_weights

from dmajor import dmaj_by_curve, dmaj_by_onenorm, dmaj_by_positive_parts, find_witness


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 4])
    args = parser.parse_args()

    rng = random.Random(args.seed)
    start = time.monotonic()
    positives = 0
    for k in range(args.count):
        n = rng.choice(args.sizes)
        y, d = rand_rvec(rng, n), rand_weights(rng, n)
        roll = rng.random()
        if roll < 0.45:
            x = rand_majorized_point(rng, y, d)
        elif roll < 0.9:
            x = rand_trace_matched(rng, y)
        else:
            x = rand_rvec(rng, n)
        votes = (
            dmaj_by_positive_parts(x, y, d),
            dmaj_by_onenorm(x, y, d),
            dmaj_by_curve(x, y, d),
        )
        witness = find_witness(x, y, d)
        if len({*votes, witness is not None}) != 1:
            print(f"DISAGREEMENT at instance {k}: x={x} y={y} d={d} votes={votes}")
            raise SystemExit(1)
        if witness is not None:
            positives += 1
            assert witness.apply(y) == x and witness.apply(d) == d
    elapsed = time.monotonic() - start
    print(
        f"{args.count} instances, {positives} hold, 0 disagreements ({elapsed:.1f}s)"
    )


if __name__ == "__main__":
    main()
