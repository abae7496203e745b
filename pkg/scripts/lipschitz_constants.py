#!/usr/bin/env python3
"""Exhaustive inverse-submatrix sweep for the polytope Lipschitz constant.

Prints C(n) for n = 2..4 by default; n = 5 sweeps roughly 170k subsets of
exact 5x5 inversions and takes a while, so it is opt-in.
"""

import argparse
import time

from dmajor import lipschitz_constant


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=4, choices=[2, 3, 4, 5])
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        start = time.monotonic()
        value = lipschitz_constant(n)
        print(f"C({n}) = {value}   ({time.monotonic() - start:.1f}s)")


if __name__ == "__main__":
    main()
