#!/usr/bin/env python3
"""Tabulate empirical lower bounds for M(r) = max_n M_r(n), where M_r(n)
is the minimum over n+1..n+r of the largest r-smooth divisor.  Whenever
2**M_r(n) <= r the instance (r, n) is certifiably nonintegral, so the
interesting column is how often the maximum escapes that threshold."""

import argparse
import sys

from binsum.experiments import m_of_r


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r-max", type=int, default=24)
    ap.add_argument("--n-max", type=int, default=10**5)
    args = ap.parse_args()

    print(f"{'r':>4} {'max M_r(n)':>12} {'at n':>10} {'2**M > r':>9}")
    print("-" * 38)
    for r in range(1, args.r_max + 1):
        stats = m_of_r(r, args.n_max)
        print(
            f"{r:>4} {stats.m_max:>12} {stats.argmax_n:>10} "
            f"{'yes' if stats.exceeds_log else 'no':>9}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
