"""Figure rendering writes one PNG per report plus a summary page."""

from closurelab.figures import render_report, render_reports
from closurelab.report import Report

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def numeric_report() -> Report:
    rep = Report(suite="growth", seed=0, seconds=0.5)
    for n, kappa in enumerate([2, 4, 10, 31], start=1):
        rep.add(f"n={n}", kappa, kappa, True)
    return rep


def textual_report() -> Report:
    rep = Report(suite="identities", seed=0, seconds=0.2)
    rep.add("closure is idempotent", "holds", "holds", True)
    rep.add("roots stay closed", "holds", "holds", True)
    return rep


def test_render_report_numeric_rows(tmp_path):
    path = tmp_path / "growth.png"
    render_report(numeric_report(), str(path))
    assert path.read_bytes().startswith(PNG_MAGIC)


def test_render_report_textual_rows(tmp_path):
    path = tmp_path / "identities.png"
    render_report(textual_report(), str(path))
    assert path.read_bytes().startswith(PNG_MAGIC)


def test_render_report_failing_rows(tmp_path):
    rep = numeric_report()
    rep.add("n=5", 98, 99, False)
    path = tmp_path / "fail.png"
    render_report(rep, str(path))
    assert path.stat().st_size > 0


def test_render_reports_single_suite_no_summary(tmp_path):
    paths = render_reports([numeric_report()], str(tmp_path))
    assert paths == [str(tmp_path / "growth.png")]
    assert {p.name for p in tmp_path.iterdir()} == {"growth.png"}


def test_render_reports_many_suites_adds_summary(tmp_path):
    paths = render_reports([numeric_report(), textual_report()], str(tmp_path))
    assert [p.rsplit("/", 1)[1] for p in paths] == [
        "growth.png",
        "identities.png",
        "summary.png",
    ]
    for p in paths:
        with open(p, "rb") as fh:
            assert fh.read(8) == PNG_MAGIC


def test_render_reports_creates_out_dir(tmp_path):
    target = tmp_path / "nested" / "plots"
    render_reports([textual_report()], str(target))
    assert (target / "identities.png").exists()
