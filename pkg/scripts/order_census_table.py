#!/usr/bin/env python3
"""Census of odd primes q <= t with a small order of 2 (order2(q) <= q**0.3),
tabulated for growing t against the t**0.6 count bound."""

import argparse
import sys

from binsum.exact import floor_power
from binsum.experiments import small_order_census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--t", type=int, nargs="*", default=[10**3, 10**4, 10**5, 10**6])
    ap.add_argument("--list", action="store_true", help="print the primes themselves")
    args = ap.parse_args()

    print(f"{'t':>10} {'count':>7} {'floor(t**0.6)':>14}")
    print("-" * 33)
    for t in args.t:
        count, primes = small_order_census(t)
        print(f"{t:>10} {count:>7} {floor_power(t, 3, 5):>14}")
        if args.list and primes:
            print(f"           {primes}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
