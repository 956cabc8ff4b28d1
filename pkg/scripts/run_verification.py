#!/usr/bin/env python3
"""Run the full identity-verification suite and print a compact summary.

Equivalent to `degenbell verify` but grouped for reading at a terminal:
one line per exact identity, then the worst numeric error per series
identity.  Exit code 0 only if everything passed.
"""

import argparse
import sys
from collections import defaultdict

from degenbell.suite import run_full_suite


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--terms", type=int, default=80)
    parser.add_argument("--tol", type=float, default=1e-9)
    args = parser.parse_args()

    result = run_full_suite(args.n_max, args.terms, args.tol)

    print(f"exact identities (n up to {args.n_max}):")
    for report in result.reports:
        status = "ok  " if report.passed else "FAIL"
        print(f"  {status} {report.identity_name}")
        if report.first_failure is not None:
            n, lhs, rhs = report.first_failure
            print(f"       first failure at n={n}")
            print(f"       lhs = {lhs.pretty()}")
            print(f"       rhs = {rhs.pretty()}")

    worst = defaultdict(lambda: 0.0)
    failed = 0
    for check in result.checks:
        worst[check.identity_name] = max(worst[check.identity_name], check.abs_error)
        failed += not check.passed
    print(f"numeric checks ({len(result.checks)} points, tol {args.tol:g}):")
    for name in sorted(worst):
        print(f"  {name}: worst abs error {worst[name]:.3e}")
    if failed:
        print(f"  {failed} numeric checks FAILED")

    print("all passed" if result.passed else "FAILURES PRESENT")
    return 0 if result.passed else 1


if __name__ == "__main__":
    sys.exit(main())
