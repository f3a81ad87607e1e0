"""Structured results for verification suites.

A report is a flat list of rows, each pairing a measured value with the
expected one.  Rows keep plain JSON-friendly scalars so that a report can
be serialized, diffed, and re-rendered without touching the objects that
produced it.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class ReportRow:
    input: str
    measured: Any
    expected: Any
    passed: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "input": self.input,
            "measured": self.measured,
            "expected": self.expected,
            "pass": self.passed,
        }


@dataclass
class Report:
    suite: str
    seed: int
    params: dict[str, Any] = field(default_factory=dict)
    rows: list[ReportRow] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def add(self, input: str, measured: Any, expected: Any, passed: bool) -> None:
        self.rows.append(ReportRow(input, measured, expected, passed))

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "params": self.params,
            "rows": [r.to_dict() for r in self.rows],
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
        }

    def json_str(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False) + "\n"

    def csv_str(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "input", "measured", "expected", "pass"])
        for r in self.rows:
            w.writerow([self.suite, r.input, r.measured, r.expected, r.passed])
        return buf.getvalue()

    def table_str(self) -> str:
        headers = ["input", "measured", "expected", "pass"]
        cells = [
            [r.input, str(r.measured), str(r.expected), "ok" if r.passed else "FAIL"]
            for r in self.rows
        ]
        widths = [
            max(len(headers[i]), *(len(row[i]) for row in cells)) if cells else len(headers[i])
            for i in range(4)
        ]
        lines = [f"== {self.suite} (seed={self.seed}) =="]
        lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)))
        lines.append("  ".join("-" * w for w in widths))
        for row in cells:
            lines.append("  ".join(row[i].ljust(widths[i]) for i in range(4)))
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"-- {self.suite}: {verdict} ({len(self.rows)} rows, {self.seconds:.2f}s)")
        return "\n".join(lines)


def write_json(reports: list[Report], path: str) -> None:
    payload: Any
    if len(reports) == 1:
        payload = reports[0].to_json_dict()
    else:
        payload = [r.to_json_dict() for r in reports]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def write_csv(reports: list[Report], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["suite", "input", "measured", "expected", "pass"])
        for rep in reports:
            for r in rep.rows:
                w.writerow([rep.suite, r.input, r.measured, r.expected, r.passed])
