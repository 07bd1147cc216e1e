"""Exact toolkit for the binomial sums sum_{k=1..n} k/(k+r) * C(n, k):
evaluation, nonintegrality certificates, and supporting experiments."""

from .certify import (
    CERTIFICATE_KINDS,
    CLASSIFICATION_KINDS,
    Certificate,
    CertifiedNonintegral,
    Classification,
    ClassifyBudget,
    Instance,
    OracleIntegral,
    OracleNonintegral,
    OrderCertificate,
    SmoothBound,
    SylvesterPrime,
    Undecided,
    classify,
    complement_check,
    m_lower,
    order_certificate,
    s_lower,
    s_upper,
    s_upper_closed,
    smooth_certificate,
    sylvester_certificate,
)
from .exact import binomial, floor_power, nth_root, power_compare, valuation
from .experiments import (
    GapProbe,
    ScanReport,
    SmoothStats,
    ThresholdConfig,
    TupleCheck,
    TupleSearch,
    TupleWitness,
    find_tuple,
    gap_probe,
    m_of_r,
    merge_reports,
    scan_density,
    small_order_census,
    verify_tuple,
)
from .ntheory import (
    PrimeRecord,
    factorize,
    is_prime,
    largest_prime_factor,
    order2,
    prime_record,
    primes_in,
    smooth_divisor,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFICATE_KINDS",
    "CLASSIFICATION_KINDS",
    "Certificate",
    "CertifiedNonintegral",
    "Classification",
    "ClassifyBudget",
    "GapProbe",
    "Instance",
    "OracleIntegral",
    "OracleNonintegral",
    "OrderCertificate",
    "PrimeRecord",
    "ScanReport",
    "SmoothBound",
    "SmoothStats",
    "SylvesterPrime",
    "ThresholdConfig",
    "TupleCheck",
    "TupleSearch",
    "TupleWitness",
    "Undecided",
    "binomial",
    "classify",
    "complement_check",
    "factorize",
    "find_tuple",
    "floor_power",
    "gap_probe",
    "is_prime",
    "largest_prime_factor",
    "m_lower",
    "m_of_r",
    "merge_reports",
    "nth_root",
    "order2",
    "order_certificate",
    "power_compare",
    "prime_record",
    "primes_in",
    "s_lower",
    "s_upper",
    "s_upper_closed",
    "scan_density",
    "small_order_census",
    "smooth_certificate",
    "smooth_divisor",
    "sylvester_certificate",
    "valuation",
]
