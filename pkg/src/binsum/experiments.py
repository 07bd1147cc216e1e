"""Supporting experiments: density scans over n, six-prime short-interval
witnesses, small-order prime censuses, smooth-divisor statistics, and
prime-gap probes.

All fractional-exponent thresholds (interval width r**0.61, order bound
r**0.3, pairwise-gcd bound r**0.001, lcm bound r**5.194) are carried as
integer exponent pairs and decided by exact big-integer comparison.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Optional

from .certify import (
    CERTIFICATE_KINDS,
    CLASSIFICATION_KINDS,
    DEFAULT_BUDGET,
    CertifiedNonintegral,
    ClassifyBudget,
    OracleIntegral,
    Undecided,
    _check_instance,
    classify,
)
from .exact import floor_power, power_compare
from .ntheory import U64_LIMIT, is_prime, order2, primes_in, smooth_divisor

TUPLE_SIZE = 6
LCM_PREFIX = 4  # the lcm bound uses the four smallest primes of the tuple

CENSUS_LIMIT = 10**7
SCAN_RANGE_LIMIT = 10**7
SMOOTH_WORK_LIMIT = 10**9


@dataclass(frozen=True)
class ThresholdConfig:
    """Exponent thresholds for the six-prime witness search, as (num, den)
    pairs: a passes "x < r**(num/den)" iff x**den < r**num, etc."""

    interval_exp: tuple[int, int] = (61, 100)  # primes drawn from (r, r + r**0.61]
    order_exp: tuple[int, int] = (3, 10)       # require order2(p) > r**0.3
    gcd_exp: tuple[int, int] = (1, 1000)       # require gcd(p-1, q-1) < r**0.001
    lcm_exp: tuple[int, int] = (2597, 500)     # check lcm bound M > r**5.194


DEFAULT_THRESHOLDS = ThresholdConfig()


@dataclass(frozen=True)
class TupleWitness:
    """Six primes from a short interval above r, with the data needed to
    re-check every selection condition from scratch."""

    r: int
    primes: tuple[int, ...]     # strictly increasing
    orders: tuple[int, ...]     # order2 of each prime
    pair_gcds: tuple[int, ...]  # gcd(p_i - 1, p_j - 1), i < j, lexicographic
    lcm_m: int                  # lcm of the four smallest primes and their orders


@dataclass(frozen=True)
class TupleSearch:
    """Outcome of a six-prime search: the witness when one exists, plus
    diagnostics either way."""

    r: int
    witness: Optional[TupleWitness]
    interval: tuple[int, int]  # inclusive search window [r+1, r+width]
    interval_primes: int
    order_passed: int


def find_tuple(r: int, config: ThresholdConfig = DEFAULT_THRESHOLDS) -> TupleSearch:
    """Search (r, r + floor(r**0.61)] for six primes whose orders of 2 all
    beat the order threshold and whose shifted values p - 1 are pairwise
    nearly coprime.

    Candidates that pass the order filter are extended greedily in
    ascending order, backtracking on pairwise-gcd conflicts.  Absence is a
    result, not an error: with the default thresholds the gcd condition
    gcd(p_i - 1, p_j - 1) < r**0.001 needs r > 2**1000 because both
    shifted values are even, so every feasible r reports no witness.
    """
    if r < 2:
        raise ValueError(f"find_tuple needs r >= 2: got {r}")
    inum, iden = config.interval_exp
    width = floor_power(r, inum, iden)
    lo, hi = r + 1, r + width
    primes = primes_in(lo, hi) if width >= 1 else []
    onum, oden = config.order_exp
    candidates = [p for p in primes if power_compare(order2(p), r, onum, oden) > 0]
    witness = _select_tuple(r, candidates, config)
    return TupleSearch(
        r=r,
        witness=witness,
        interval=(lo, hi),
        interval_primes=len(primes),
        order_passed=len(candidates),
    )


def _select_tuple(r: int, candidates: list[int], config: ThresholdConfig) -> Optional[TupleWitness]:
    gnum, gden = config.gcd_exp

    def gcd_ok(p: int, q: int) -> bool:
        return power_compare(gcd(p - 1, q - 1), r, gnum, gden) < 0

    chosen: list[int] = []

    def extend(start: int) -> bool:
        if len(chosen) == TUPLE_SIZE:
            return True
        for i in range(start, len(candidates)):
            p = candidates[i]
            if all(gcd_ok(p, q) for q in chosen):
                chosen.append(p)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        return None
    primes = tuple(chosen)
    orders = tuple(order2(p) for p in primes)
    pair_gcds = tuple(
        gcd(primes[i] - 1, primes[j] - 1)
        for i in range(TUPLE_SIZE)
        for j in range(i + 1, TUPLE_SIZE)
    )
    lcm_m = lcm(*primes[:LCM_PREFIX], *orders[:LCM_PREFIX])
    return TupleWitness(r=r, primes=primes, orders=orders, pair_gcds=pair_gcds, lcm_m=lcm_m)


@dataclass(frozen=True)
class TupleCheck:
    """verify_tuple outcome; the lcm bound is reported separately because
    it is a consequence of the other conditions, not a selection filter."""

    conditions_ok: bool
    bound_ok: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.conditions_ok and self.bound_ok


def verify_tuple(w: TupleWitness, config: ThresholdConfig = DEFAULT_THRESHOLDS) -> TupleCheck:
    """Re-check every witness condition from scratch: primality, interval
    membership, recomputed orders and pairwise gcds against their
    thresholds, the stored lcm, and finally the lcm lower bound
    M > r**(lcm_exp)."""
    fails: list[str] = []
    r = w.r
    if r < 2:
        fails.append(f"r={r} out of range")
    if len(w.primes) != TUPLE_SIZE:
        fails.append(f"expected {TUPLE_SIZE} primes, got {len(w.primes)}")
    if any(w.primes[i] >= w.primes[i + 1] for i in range(len(w.primes) - 1)):
        fails.append("primes not strictly increasing")
    if len(w.orders) != len(w.primes) or len(w.pair_gcds) != len(w.primes) * (len(w.primes) - 1) // 2:
        fails.append("orders/pair_gcds length mismatch")

    inum, iden = config.interval_exp
    onum, oden = config.order_exp
    for idx, p in enumerate(w.primes):
        if p <= 2 or p >= U64_LIMIT or not is_prime(p) or p % 2 == 0:
            fails.append(f"p={p} is not an odd prime")
            continue
        if p <= r or power_compare(p - r, r, inum, iden) > 0:
            fails.append(f"p={p} outside (r, r + r**({inum}/{iden})]")
        t = order2(p)
        if idx < len(w.orders) and w.orders[idx] != t:
            fails.append(f"stored order {w.orders[idx]} != order2({p}) = {t}")
        if r < 2 or power_compare(t, r, onum, oden) <= 0:
            fails.append(f"order2({p}) = {t} fails the order threshold")

    if not fails:
        gnum, gden = config.gcd_exp
        k = 0
        for i in range(TUPLE_SIZE):
            for j in range(i + 1, TUPLE_SIZE):
                g = gcd(w.primes[i] - 1, w.primes[j] - 1)
                if w.pair_gcds[k] != g:
                    fails.append(f"stored gcd {w.pair_gcds[k]} != gcd for pair ({i},{j}) = {g}")
                if power_compare(g, r, gnum, gden) >= 0:
                    fails.append(f"gcd {g} for pair ({i},{j}) fails the gcd threshold")
                k += 1
        expected_lcm = lcm(*w.primes[:LCM_PREFIX], *[order2(p) for p in w.primes[:LCM_PREFIX]])
        if w.lcm_m != expected_lcm:
            fails.append(f"stored lcm {w.lcm_m} != recomputed {expected_lcm}")

    bound_ok = r >= 1 and w.lcm_m >= 1 and power_compare(w.lcm_m, r, *config.lcm_exp) > 0
    return TupleCheck(conditions_ok=not fails, bound_ok=bound_ok, failures=tuple(fails))


@dataclass
class ScanReport:
    """Aggregated classification tallies over one (r, n)-range."""

    r: int
    n_lo: int
    n_hi: int
    counts: dict[str, int] = field(default_factory=dict)
    cert_counts: dict[str, int] = field(default_factory=dict)
    integral_witnesses: list[int] = field(default_factory=list)
    undecided: list[int] = field(default_factory=list)
    undecided_cap: int = 100
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def scan_density(
    r: int,
    n_lo: int,
    n_hi: int,
    budget: ClassifyBudget = DEFAULT_BUDGET,
    *,
    undecided_cap: int = 100,
    max_range: int = SCAN_RANGE_LIMIT,
) -> ScanReport:
    """Classify every n in [n_lo, n_hi] and tally the outcomes.

    The aggregate is deterministic and independent of how the range is
    partitioned (see merge_reports).
    """
    if n_lo > n_hi:
        raise ValueError(f"empty scan range [{n_lo}, {n_hi}]")
    _check_instance(r, n_lo)
    _check_instance(r, n_hi)
    if n_hi - n_lo + 1 > max_range:
        raise ValueError(f"scan range size {n_hi - n_lo + 1} exceeds limit {max_range}")
    t0 = time.perf_counter()
    counts = {k: 0 for k in CLASSIFICATION_KINDS}
    cert_counts = {k: 0 for k in CERTIFICATE_KINDS}
    integral: list[int] = []
    undecided: list[int] = []
    for n in range(n_lo, n_hi + 1):
        outcome = classify(r, n, budget)
        counts[outcome.kind] += 1
        if isinstance(outcome, CertifiedNonintegral):
            cert_counts[outcome.certificate.kind] += 1
        elif isinstance(outcome, OracleIntegral):
            integral.append(n)
        elif isinstance(outcome, Undecided) and len(undecided) < undecided_cap:
            undecided.append(n)
    return ScanReport(
        r=r,
        n_lo=n_lo,
        n_hi=n_hi,
        counts=counts,
        cert_counts=cert_counts,
        integral_witnesses=integral,
        undecided=undecided,
        undecided_cap=undecided_cap,
        elapsed=time.perf_counter() - t0,
    )


def merge_reports(a: ScanReport, b: ScanReport) -> ScanReport:
    """Combine reports over adjacent ranges of the same r (either order)."""
    if a.r != b.r:
        raise ValueError("cannot merge reports for different r")
    if a.undecided_cap != b.undecided_cap:
        raise ValueError("cannot merge reports with different undecided caps")
    if b.n_hi + 1 == a.n_lo:
        a, b = b, a
    if a.n_hi + 1 != b.n_lo:
        raise ValueError(f"ranges [{a.n_lo},{a.n_hi}] and [{b.n_lo},{b.n_hi}] are not adjacent")
    return ScanReport(
        r=a.r,
        n_lo=a.n_lo,
        n_hi=b.n_hi,
        counts={k: a.counts.get(k, 0) + b.counts.get(k, 0) for k in CLASSIFICATION_KINDS},
        cert_counts={k: a.cert_counts.get(k, 0) + b.cert_counts.get(k, 0) for k in CERTIFICATE_KINDS},
        integral_witnesses=a.integral_witnesses + b.integral_witnesses,
        undecided=(a.undecided + b.undecided)[: a.undecided_cap],
        undecided_cap=a.undecided_cap,
        elapsed=a.elapsed + b.elapsed,
    )


def small_order_census(t: int, *, limit: int = CENSUS_LIMIT) -> tuple[int, list[int]]:
    """Count (and list) the odd primes q <= t whose order of 2 is at most
    q**0.3, i.e. order2(q)**10 <= q**3."""
    if t < 1:
        raise ValueError(f"census bound must be >= 1: got {t}")
    if t > limit:
        raise ValueError(f"census bound {t} exceeds limit {limit}")
    hits = [q for q in primes_in(3, t) if power_compare(order2(q), q, 3, 10) <= 0] if t >= 3 else []
    return len(hits), hits


@dataclass(frozen=True)
class SmoothStats:
    """Empirical maximum of the windowed smooth-divisor minimum M_r(n)
    over 1 <= n <= n_max."""

    r: int
    n_max: int
    m_max: int
    argmax_n: int       # least n attaining m_max
    exceeds_log: bool   # 2**m_max > r


def m_of_r(r: int, n_max: int, *, work_limit: int = SMOOTH_WORK_LIMIT) -> SmoothStats:
    """Maximize M_r(n) = min_{1<=j<=r} s_r(n+j) over 1 <= n <= n_max.

    Computed with a sliding window minimum so each smooth divisor is
    evaluated once.
    """
    _check_instance(r, n_max)
    if r * n_max > work_limit:
        raise ValueError(f"r * n_max = {r * n_max} exceeds work limit {work_limit}")
    best_m, best_n = 0, 0
    window: deque[tuple[int, int]] = deque()  # (i, s_r(i)), s-values increasing
    for i in range(2, n_max + r + 1):
        s = smooth_divisor(r, i)
        while window and window[-1][1] >= s:
            window.pop()
        window.append((i, s))
        n = i - r
        if n >= 1:
            while window[0][0] < n + 1:
                window.popleft()
            m = window[0][1]
            if m > best_m:
                best_m, best_n = m, n
    return SmoothStats(
        r=r,
        n_max=n_max,
        m_max=best_m,
        argmax_n=best_n,
        exceeds_log=best_m >= r.bit_length(),  # 2**m_max > r
    )


@dataclass(frozen=True)
class GapProbe:
    """Next prime above n, with the gap sized against n**(1/20) and
    n**(1/11) by exact comparison (-1 / 0 / +1 = below / at / above)."""

    n: int
    next_prime: int
    gap: int
    gap20_vs_n: int  # sign of gap**20 - n
    gap11_vs_n: int  # sign of gap**11 - n


def gap_probe(n: int) -> GapProbe:
    """Least prime above n and the resulting gap."""
    if n < 1:
        raise ValueError(f"gap_probe needs n >= 1: got {n}")
    x = n + 1
    while not is_prime(x):
        x += 1
    gap = x - n
    return GapProbe(
        n=n,
        next_prime=x,
        gap=gap,
        gap20_vs_n=power_compare(gap, n, 1, 20),
        gap11_vs_n=power_compare(gap, n, 1, 11),
    )
