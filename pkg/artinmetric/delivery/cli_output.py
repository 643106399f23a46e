"""Stable stdout rendering: key=value records, CSV tables and report summaries."""

from __future__ import annotations

import csv
import sys
from typing import Any, Sequence

from artinmetric.report import VerificationReport

PLAIN = "plain"
CSV = "csv"


def _text(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def print_records(records: dict[str, Any], fmt: str = PLAIN) -> None:
    """One key=value per line, or a CSV header plus a single row."""
    if fmt == CSV:
        print_table(list(records), [list(records.values())])
        return
    for key, value in records.items():
        print(f"{key}={_text(value)}")


def print_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_text(v) for v in row])


def print_report(report: VerificationReport) -> None:
    for check in report.checks:
        status = "pass" if check.passed else "FAIL"
        print(f"check={check.name} checked={check.checked} failures={check.failures} status={status}")
        for example in check.counterexamples:
            print(f"  counterexample: {example}")
    print(report.summary_line())
