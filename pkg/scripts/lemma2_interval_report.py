#!/usr/bin/env python3
"""Report the six-prime short-interval search across a sweep of r: interval
width, prime counts, order-filter survivors, and the smallest pairwise gcd
among them.

With the default thresholds the gcd filter gcd(p-1, q-1) < r**0.001 cannot
pass below r = 2**1000 (all pairwise gcds are even), so this report shows
where the search stalls; pass a relaxed --gcd-exp such as 1/1 to watch the
selection and lcm-bound machinery succeed."""

import argparse
import sys
from math import gcd

from binsum.experiments import ThresholdConfig, find_tuple, verify_tuple
from binsum.ntheory import order2, primes_in


def exponent(text):
    num, _, den = text.partition("/")
    return (int(num), int(den) if den else 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", type=int, nargs="*", default=[10, 100, 10**3, 10**4, 10**5, 10**6])
    ap.add_argument("--gcd-exp", type=exponent, default=(1, 1000), metavar="NUM/DEN")
    args = ap.parse_args()

    config = ThresholdConfig(gcd_exp=args.gcd_exp)
    for r in args.r:
        res = find_tuple(r, config)
        lo, hi = res.interval
        line = (
            f"r={r}: interval [{lo}, {hi}] width {hi - lo + 1 if hi >= lo else 0}, "
            f"{res.interval_primes} primes, {res.order_passed} pass the order filter"
        )
        survivors = [p for p in primes_in(lo, hi)] if hi >= lo else []
        survivors = [p for p in survivors if order2(p) ** 10 > r**3]
        if len(survivors) >= 2:
            gmin = min(
                gcd(p - 1, q - 1)
                for i, p in enumerate(survivors)
                for q in survivors[i + 1 :]
            )
            line += f", min pairwise gcd {gmin}"
        if res.witness is None:
            print(line + "; no witness")
        else:
            check = verify_tuple(res.witness, config)
            print(line + f"; witness {list(res.witness.primes)}")
            print(
                f"      orders {list(res.witness.orders)}; lcm M = {res.witness.lcm_m} "
                f"(conditions {'ok' if check.conditions_ok else 'FAIL'}, "
                f"M > r**5.194 {'ok' if check.bound_ok else 'FAIL'})"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
