"""Serialization of classification results to jsonl / csv / human lines.

All integers are rendered as decimal strings so downstream consumers never
lose precision, and json objects are emitted with sorted keys and fixed
separators so identical runs produce byte-identical files.
"""

from __future__ import annotations

import json

from .certify import (
    Certificate,
    CertifiedNonintegral,
    Classification,
    OracleIntegral,
    OracleNonintegral,
    OrderCertificate,
    SmoothBound,
    SylvesterPrime,
)

CSV_COLUMNS = (
    "r",
    "n",
    "classification",
    "certificate_type",
    "p",
    "k0",
    "j",
    "m_value",
    "value_numerator",
    "value_denominator",
)


def certificate_record(cert: Certificate) -> dict[str, str]:
    if isinstance(cert, SylvesterPrime):
        return {"type": "sylvester", "p": str(cert.p), "k0": str(cert.k0)}
    if isinstance(cert, OrderCertificate):
        return {"type": "order", "p": str(cert.p), "j": str(cert.j)}
    if isinstance(cert, SmoothBound):
        return {"type": "smooth", "m_value": str(cert.m_value)}
    raise TypeError(f"not a certificate: {cert!r}")


def certificate_from_record(rec: dict[str, str]) -> Certificate:
    """Inverse of certificate_record, for re-verifying stored results."""
    kind = rec.get("type")
    if kind == "sylvester":
        return SylvesterPrime(p=int(rec["p"]), k0=int(rec["k0"]))
    if kind == "order":
        return OrderCertificate(p=int(rec["p"]), j=int(rec["j"]))
    if kind == "smooth":
        return SmoothBound(m_value=int(rec["m_value"]))
    raise ValueError(f"unknown certificate type: {kind!r}")


def classification_record(r: int, n: int, outcome: Classification) -> dict:
    rec: dict = {"r": str(r), "n": str(n), "classification": outcome.kind}
    if isinstance(outcome, CertifiedNonintegral):
        rec["certificate"] = certificate_record(outcome.certificate)
    elif isinstance(outcome, (OracleNonintegral, OracleIntegral)):
        rec["value_numerator"] = str(outcome.value.numerator)
        rec["value_denominator"] = str(outcome.value.denominator)
    return rec


def to_json_line(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def to_csv_row(rec: dict) -> list[str]:
    cert = rec.get("certificate", {})
    row = {
        "r": rec.get("r", ""),
        "n": rec.get("n", ""),
        "classification": rec.get("classification", ""),
        "certificate_type": cert.get("type", ""),
        "p": cert.get("p", ""),
        "k0": cert.get("k0", ""),
        "j": cert.get("j", ""),
        "m_value": cert.get("m_value", ""),
        "value_numerator": rec.get("value_numerator", ""),
        "value_denominator": rec.get("value_denominator", ""),
    }
    return [row[c] for c in CSV_COLUMNS]


def to_human_line(rec: dict) -> str:
    r, n = rec.get("r"), rec.get("n")
    kind = rec.get("classification")
    if kind == "certified_nonintegral":
        cert = rec["certificate"]
        if cert["type"] == "sylvester":
            detail = f"sylvester prime p={cert['p']} at k0={cert['k0']}"
        elif cert["type"] == "order":
            detail = f"order certificate p={cert['p']} at j={cert['j']}"
        else:
            detail = f"smooth bound M={cert['m_value']}"
        return f"(r={r}, n={n}) nonintegral [{detail}]"
    if kind in ("oracle_nonintegral", "oracle_integral"):
        tag = "INTEGRAL" if kind == "oracle_integral" else "nonintegral"
        return (
            f"(r={r}, n={n}) {tag} [oracle value "
            f"{rec['value_numerator']}/{rec['value_denominator']}]"
        )
    return f"(r={r}, n={n}) undecided"


def parse_scan_line(line: str, expected_r: int) -> tuple[int, str]:
    """Validate one stored jsonl scan line; return its (n, classification).

    Raises ValueError when the line does not look like a scan record for
    this r (schema check before resuming).
    """
    rec = json.loads(line)
    if not isinstance(rec, dict):
        raise ValueError("record is not an object")
    for key in ("r", "n", "classification"):
        if key not in rec:
            raise ValueError(f"record lacks key {key!r}")
    if rec["r"] != str(expected_r):
        raise ValueError(f"record r={rec['r']} does not match scan r={expected_r}")
    return int(rec["n"]), str(rec["classification"])
