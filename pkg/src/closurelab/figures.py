"""Chart rendering for verification reports.

One PNG per report: rows with numeric content are drawn as measured points
against their expected values, everything else as a pass strip.  A run over
several suites also gets a summary page.  Rendering is a presentation layer
only; nothing here feeds back into verdicts.
"""

from __future__ import annotations

import os
import re

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import Report

_NUMBER = re.compile(r"^\s*(?:[<>]=?\s*)?(-?\d+(?:\.\d+)?)")

PASS_COLOR = "#2a9d4e"
FAIL_COLOR = "#c4372c"
EXPECTED_COLOR = "#666666"


def _as_number(value) -> float | None:
    if isinstance(value, bool):
        return None
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        m = _NUMBER.match(value)
        if m:
            return float(m.group(1))
    return None


def _shorten(text: str, limit: int = 38) -> str:
    return text if len(text) <= limit else text[: limit - 3] + "..."


def render_report(report: Report, path: str) -> None:
    rows = report.rows
    numeric = [(i, _as_number(r.measured), _as_number(r.expected)) for i, r in enumerate(rows)]
    numeric = [(i, m, e) for i, m, e in numeric if m is not None and e is not None]
    width = max(6.0, 0.45 * max(len(rows), 1) + 2.5)
    fig, ax = plt.subplots(figsize=(width, 5.0))
    verdict = "PASS" if report.passed else "FAIL"
    ax.set_title(f"{report.suite} (seed {report.seed}): {verdict}")
    if numeric and len(numeric) >= max(1, len(rows) // 2):
        xs = [i for i, _, _ in numeric]
        ax.plot(
            xs,
            [e for _, _, e in numeric],
            marker="x",
            linestyle=":",
            color=EXPECTED_COLOR,
            label="expected",
        )
        colors = [PASS_COLOR if rows[i].passed else FAIL_COLOR for i, _, _ in numeric]
        ax.scatter(xs, [m for _, m, _ in numeric], c=colors, zorder=3, label="measured")
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels([_shorten(r.input) for r in rows], rotation=60, ha="right", fontsize=7)
        ax.set_ylabel("value")
        ax.legend(loc="best", fontsize=8)
    else:
        ys = range(len(rows))
        ax.barh(
            list(ys),
            [1] * len(rows),
            color=[PASS_COLOR if r.passed else FAIL_COLOR for r in rows],
        )
        ax.set_yticks(list(ys))
        ax.set_yticklabels([_shorten(r.input, 60) for r in rows], fontsize=7)
        ax.invert_yaxis()
        ax.set_xticks([])
        for y, row in zip(ys, rows):
            ax.text(0.02, y, "ok" if row.passed else "FAIL", va="center", fontsize=7, color="white")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_summary(reports: list[Report], path: str) -> None:
    fig, ax = plt.subplots(figsize=(8.0, 0.42 * len(reports) + 1.6))
    names = [r.suite for r in reports]
    ax.barh(
        range(len(reports)),
        [max(r.seconds, 1e-3) for r in reports],
        color=[PASS_COLOR if r.passed else FAIL_COLOR for r in reports],
    )
    ax.set_yticks(range(len(reports)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds")
    total = "PASS" if all(r.passed for r in reports) else "FAIL"
    ax.set_title(f"verification run: {total}")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def render_reports(reports: list[Report], out_dir: str) -> list[str]:
    """Write one PNG per report into out_dir, plus a summary page for
    multi-suite runs; returns the written paths."""
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for rep in reports:
        target = os.path.join(out_dir, f"{rep.suite}.png")
        render_report(rep, target)
        paths.append(target)
    if len(reports) > 1:
        target = os.path.join(out_dir, "summary.png")
        render_summary(reports, target)
        paths.append(target)
    return paths
