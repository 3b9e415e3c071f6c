#!/usr/bin/env python3
"""Run the full verification matrix and print a timing table.

Usage: python scripts/verify_sweep.py [--max-m 3] [--max-n 4] [--seed 0]
"""

import argparse
import sys

from eulersym.identities import enumerate_specs, verify


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    failed = 0
    total_ms = 0.0
    for spec in enumerate_specs(args.max_m, args.max_n, args.seed):
        report = verify(spec)
        total_ms += report.elapsed_ms
        status = "ok " if report.holds else "FAIL"
        failed += 0 if report.holds else 1
        where = spec.identity
        if spec.m is not None:
            where += f" m={spec.m}"
        where += f" n={spec.n}"
        if spec.i is not None:
            where += f" i={spec.i}"
        print(
            f"{status} {where:28s} lhs={report.lhs_terms:5d} "
            f"rhs={report.rhs_terms:5d} residual={report.residual_terms:3d} "
            f"{report.elapsed_ms:8.1f} ms"
        )
    print(f"\ntotal {total_ms/1000:.2f} s, {failed} failure(s)")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
