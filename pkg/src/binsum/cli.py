"""Command-line front end.

Subcommands map one-to-one onto the library operations: oracle (exact sum
values), identity (closed-form and complement checks over a grid), certify
(classify one instance), scan (classify an n-range, resumable and
parallel), lemma2 (six-prime interval witness search), census (small-order
primes), msmooth (windowed smooth-divisor statistics), gaps (next-prime
probe).

Exit status: 0 = completed and no integral value seen, 1 = some instance
evaluated to an integer (a counterexample to the nonintegrality
conjecture), 2 = usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import multiprocessing
import os
import sys
import time
from typing import Iterable, Optional

from .certify import (
    ClassifyBudget,
    OracleIntegral,
    classify,
    complement_check,
    s_lower,
    s_upper,
    s_upper_closed,
)
from .experiments import (
    ThresholdConfig,
    find_tuple,
    gap_probe,
    m_of_r,
    small_order_census,
    verify_tuple,
)
from .records import (
    CSV_COLUMNS,
    classification_record,
    parse_scan_line,
    to_csv_row,
    to_human_line,
    to_json_line,
)

EXIT_OK = 0
EXIT_INTEGRAL_FOUND = 1
EXIT_USAGE = 2

_SCAN_CHUNK = 512


class _Writer:
    """Single-destination record writer for one of the three formats."""

    def __init__(self, stream: io.TextIOBase, fmt: str, write_header: bool = True):
        self.stream = stream
        self.fmt = fmt
        if fmt == "csv" and write_header:
            csv.writer(stream, lineterminator="\n").writerow(CSV_COLUMNS)

    def write(self, rec: dict) -> None:
        if self.fmt == "jsonl":
            self.stream.write(to_json_line(rec) + "\n")
        elif self.fmt == "csv":
            csv.writer(self.stream, lineterminator="\n").writerow(to_csv_row(rec))
        else:
            self.stream.write(to_human_line(rec) + "\n")


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise ValueError(f"{name} must be >= 1: got {value}")
    return value


def _parse_exponent(text: str) -> tuple[int, int]:
    num, _, den = text.partition("/")
    pair = (int(num), int(den) if den else 1)
    if pair[0] < 1 or pair[1] < 1:
        raise ValueError(f"exponent must be a positive fraction: got {text}")
    return pair


def _add_output_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("jsonl", "csv", "human"), default="jsonl")
    sub.add_argument("--out", metavar="PATH", default=None, help="write records to PATH instead of stdout")


def _open_writer(args, append: bool = False):
    if args.out is None:
        return _Writer(sys.stdout, args.format), None
    handle = open(args.out, "a" if append else "w", encoding="utf-8", newline="")
    return _Writer(handle, args.format, write_header=not append), handle


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="binsum",
        description="Exact toolkit for the binomial sums sum k/(k+r)*C(n,k) and their nonintegrality certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="exact value of one sum")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--upper", action="store_true", help="evaluate the complementary sum instead")
    p.add_argument("--closed", action="store_true", help="use the closed form (implies --upper)")
    p.add_argument("--oracle-cutoff", type=int, default=3000)
    _add_output_options(p)

    p = sub.add_parser("identity", help="closed-form and complement identity checks over a grid")
    p.add_argument("--r-max", type=int, default=25)
    p.add_argument("--n-max", type=int, default=100)
    _add_output_options(p)

    p = sub.add_parser("certify", help="classify one (r, n) instance")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle-cutoff", type=int, default=3000)
    _add_output_options(p)

    p = sub.add_parser("scan", help="classify every n in a range for one r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-start", type=int, required=True)
    p.add_argument("--n-end", type=int, required=True)
    p.add_argument("--oracle-cutoff", type=int, default=3000)
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    _add_output_options(p)

    p = sub.add_parser("lemma2", help="six-prime short-interval witness search")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--interval-exp", type=str, default="61/100", metavar="NUM/DEN")
    p.add_argument("--order-exp", type=str, default="3/10", metavar="NUM/DEN")
    p.add_argument("--gcd-exp", type=str, default="1/1000", metavar="NUM/DEN")
    p.add_argument("--lcm-exp", type=str, default="2597/500", metavar="NUM/DEN")
    _add_output_options(p)

    p = sub.add_parser("census", help="odd primes q <= t with order2(q) <= q**0.3")
    p.add_argument("--t", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("msmooth", help="max over n <= n-max of the windowed smooth minimum M_r(n)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_output_options(p)

    p = sub.add_parser("gaps", help="next prime above n and the gap scale")
    p.add_argument("--n", type=int, required=True)
    _add_output_options(p)

    return parser


def _cmd_oracle(args) -> int:
    r = _positive("r", args.r)
    n = _positive("n", args.n)
    if args.closed:
        value = s_upper_closed(r, n)
        which = "upper"
    elif args.upper:
        value = s_upper(r, n, cutoff=args.oracle_cutoff)
        which = "upper"
    else:
        value = s_lower(r, n, cutoff=args.oracle_cutoff)
        which = "lower"
    rec = {
        "r": str(r),
        "n": str(n),
        "sum": which,
        "value_numerator": str(value.numerator),
        "value_denominator": str(value.denominator),
    }
    writer, handle = _open_writer(args)
    try:
        if args.format == "human":
            writer.stream.write(
                f"(r={r}, n={n}) {which} sum = {value.numerator}/{value.denominator}\n"
            )
        else:
            writer.write(rec)
    finally:
        if handle:
            handle.close()
    return EXIT_INTEGRAL_FOUND if value.denominator == 1 else EXIT_OK


def _cmd_identity(args) -> int:
    r_max = _positive("r-max", args.r_max)
    n_max = _positive("n-max", args.n_max)
    writer, handle = _open_writer(args)
    bad = 0
    try:
        for r in range(1, r_max + 1):
            for n in range(1, n_max + 1):
                closed_ok = s_upper(r, n) == s_upper_closed(r, n)
                comp_ok = complement_check(r, n)
                if not (closed_ok and comp_ok):
                    bad += 1
                rec = {
                    "r": str(r),
                    "n": str(n),
                    "closed_form_ok": closed_ok,
                    "complement_ok": comp_ok,
                }
                if args.format == "human":
                    writer.stream.write(
                        f"(r={r}, n={n}) closed_form={'ok' if closed_ok else 'FAIL'} "
                        f"complement={'ok' if comp_ok else 'FAIL'}\n"
                    )
                else:
                    writer.write(rec)
    finally:
        if handle:
            handle.close()
    print(
        f"identity grid r<={r_max}, n<={n_max}: {bad} violations",
        file=sys.stderr,
    )
    return EXIT_OK


def _cmd_certify(args) -> int:
    r = _positive("r", args.r)
    n = _positive("n", args.n)
    budget = ClassifyBudget(oracle_cutoff=_positive("oracle-cutoff", args.oracle_cutoff))
    outcome = classify(r, n, budget)
    writer, handle = _open_writer(args)
    try:
        writer.write(classification_record(r, n, outcome))
    finally:
        if handle:
            handle.close()
    return EXIT_INTEGRAL_FOUND if isinstance(outcome, OracleIntegral) else EXIT_OK


def _classify_chunk(task: tuple[int, list[int], ClassifyBudget]) -> list[tuple[int, dict]]:
    r, ns, budget = task
    return [(n, classification_record(r, n, classify(r, n, budget))) for n in ns]


def _chunked(ns: list[int], size: int) -> Iterable[list[int]]:
    for i in range(0, len(ns), size):
        yield ns[i : i + size]


def _load_resume(path: str, r: int) -> tuple[set[int], int]:
    """Collect n values (and integral count) already present in a jsonl
    scan file."""
    done: set[int] = set()
    integral = 0
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, 1):
            line = line.strip()
            if not line:
                continue
            try:
                n, kind = parse_scan_line(line, r)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: not a scan record for r={r}: {exc}")
            done.add(n)
            if kind == "oracle_integral":
                integral += 1
    return done, integral


def _cmd_scan(args) -> int:
    r = _positive("r", args.r)
    n_start = _positive("n-start", args.n_start)
    n_end = args.n_end
    if n_end < n_start:
        raise ValueError(f"empty scan range [{n_start}, {n_end}]")
    threads = _positive("threads", args.threads)
    budget = ClassifyBudget(oracle_cutoff=_positive("oracle-cutoff", args.oracle_cutoff))

    done: set[int] = set()
    prior_integral = 0
    resuming = False
    if args.out and args.format == "jsonl" and os.path.exists(args.out) and os.path.getsize(args.out) > 0:
        done, prior_integral = _load_resume(args.out, r)
        resuming = True

    todo = [n for n in range(n_start, n_end + 1) if n not in done]
    writer, handle = _open_writer(args, append=resuming)
    integral = prior_integral
    counts: dict[str, int] = {}
    t0 = time.perf_counter()
    try:
        tasks = [(r, chunk, budget) for chunk in _chunked(todo, _SCAN_CHUNK)]
        if threads > 1 and len(tasks) > 1:
            with multiprocessing.Pool(processes=threads) as pool:
                results = pool.imap(_classify_chunk, tasks)
                for chunk_result in results:
                    for n, rec in chunk_result:
                        writer.write(rec)
                        counts[rec["classification"]] = counts.get(rec["classification"], 0) + 1
        else:
            for task in tasks:
                for n, rec in _classify_chunk(task):
                    writer.write(rec)
                    counts[rec["classification"]] = counts.get(rec["classification"], 0) + 1
        integral += counts.get("oracle_integral", 0)
    finally:
        if handle:
            handle.close()
    elapsed = time.perf_counter() - t0
    skipped = f", {len(done)} already present" if resuming else ""
    summary = ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) or "nothing to do"
    print(
        f"scan r={r}, n in [{n_start}, {n_end}]: {summary}{skipped} ({elapsed:.2f}s)",
        file=sys.stderr,
    )
    if integral:
        print(f"INTEGRAL VALUE FOUND: {integral} instance(s)", file=sys.stderr)
        return EXIT_INTEGRAL_FOUND
    return EXIT_OK


def _cmd_lemma2(args) -> int:
    r = _positive("r", args.r)
    config = ThresholdConfig(
        interval_exp=_parse_exponent(args.interval_exp),
        order_exp=_parse_exponent(args.order_exp),
        gcd_exp=_parse_exponent(args.gcd_exp),
        lcm_exp=_parse_exponent(args.lcm_exp),
    )
    result = find_tuple(r, config)
    rec: dict = {
        "r": str(r),
        "interval_lo": str(result.interval[0]),
        "interval_hi": str(result.interval[1]),
        "interval_primes": str(result.interval_primes),
        "order_passed": str(result.order_passed),
    }
    if result.witness is None:
        rec["witness"] = None
    else:
        w = result.witness
        check = verify_tuple(w, config)
        rec["witness"] = {
            "primes": [str(p) for p in w.primes],
            "orders": [str(t) for t in w.orders],
            "pair_gcds": [str(g) for g in w.pair_gcds],
            "lcm_m": str(w.lcm_m),
            "verified": check.conditions_ok,
            "lcm_bound_ok": check.bound_ok,
        }
    writer, handle = _open_writer(args)
    try:
        if args.format == "human":
            found = "no witness" if result.witness is None else f"witness {list(result.witness.primes)}"
            writer.stream.write(
                f"r={r}: interval [{rec['interval_lo']}, {rec['interval_hi']}] holds "
                f"{rec['interval_primes']} primes ({rec['order_passed']} pass the order filter); {found}\n"
            )
        else:
            writer.write(rec)
    finally:
        if handle:
            handle.close()
    return EXIT_OK


def _cmd_census(args) -> int:
    t = _positive("t", args.t)
    count, primes = small_order_census(t)
    rec = {"t": str(t), "count": str(count), "primes": [str(q) for q in primes]}
    writer, handle = _open_writer(args)
    try:
        if args.format == "human":
            listing = f": {primes}" if primes else ""
            writer.stream.write(f"census t={t}: {count} small-order primes{listing}\n")
        else:
            writer.write(rec)
    finally:
        if handle:
            handle.close()
    return EXIT_OK


def _cmd_msmooth(args) -> int:
    r = _positive("r", args.r)
    n_max = _positive("n-max", args.n_max)
    stats = m_of_r(r, n_max)
    rec = {
        "r": str(r),
        "n_max": str(n_max),
        "m_max": str(stats.m_max),
        "argmax_n": str(stats.argmax_n),
        "exceeds_log": stats.exceeds_log,
    }
    writer, handle = _open_writer(args)
    try:
        if args.format == "human":
            writer.stream.write(
                f"M_{r}(n) over n<={n_max}: max {stats.m_max} at n={stats.argmax_n} "
                f"({'exceeds' if stats.exceeds_log else 'within'} log2(r))\n"
            )
        else:
            writer.write(rec)
    finally:
        if handle:
            handle.close()
    return EXIT_OK


def _cmd_gaps(args) -> int:
    n = _positive("n", args.n)
    probe = gap_probe(n)
    names = {-1: "lt", 0: "eq", 1: "gt"}
    rec = {
        "n": str(n),
        "next_prime": str(probe.next_prime),
        "gap": str(probe.gap),
        "gap20_vs_n": names[probe.gap20_vs_n],
        "gap11_vs_n": names[probe.gap11_vs_n],
    }
    writer, handle = _open_writer(args)
    try:
        if args.format == "human":
            writer.stream.write(
                f"next prime after {n} is {probe.next_prime} (gap {probe.gap}; "
                f"gap**20 {names[probe.gap20_vs_n]} n, gap**11 {names[probe.gap11_vs_n]} n)\n"
            )
        else:
            writer.write(rec)
    finally:
        if handle:
            handle.close()
    return EXIT_OK


_HANDLERS = {
    "oracle": _cmd_oracle,
    "identity": _cmd_identity,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
    "lemma2": _cmd_lemma2,
    "census": _cmd_census,
    "msmooth": _cmd_msmooth,
    "gaps": _cmd_gaps,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"binsum: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
