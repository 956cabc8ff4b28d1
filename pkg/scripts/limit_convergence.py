#!/usr/bin/env python3
"""Sweep lambda toward 0 and watch the degenerate Bell value converge to
the classical one.  Emits CSV (lambda, degenerate, classical, abs_error)
to standard output; the error should shrink roughly linearly in lambda.
"""

import argparse
import csv
import sys

from degenbell.numeric import limit_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--x", type=float, default=1.0)
    parser.add_argument(
        "--lambdas",
        type=float,
        nargs="+",
        default=[10.0**-k for k in range(1, 9)],
    )
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["lambda", "degenerate", "classical", "abs_error"])
    for check in limit_sweep(args.n, args.x, args.lambdas):
        writer.writerow([repr(check.lam), repr(check.lhs), repr(check.rhs), repr(check.abs_error)])
    return 0


if __name__ == "__main__":
    sys.exit(main())
