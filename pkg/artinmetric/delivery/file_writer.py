"""Persist a verification report as ``verify-k<k>-<gens>-r<radius>.json`` and ``.md``."""

from __future__ import annotations

from pathlib import Path

from artinmetric.report import VerificationReport
from artinmetric.utils.logging import get_logger

log = get_logger(__name__)


def write_artifacts(report: VerificationReport, reports_dir: str | Path = "reports") -> tuple[str, str]:
    """Write the machine-readable check results and the rendered summary.

    Re-running the same (k, gens, radius) replaces the earlier pair.
    Returns the JSON path and the Markdown path.
    """
    base = Path(reports_dir)
    base.mkdir(parents=True, exist_ok=True)

    outputs = {
        base / f"{report.stem}.json": report.to_json(),
        base / f"{report.stem}.md": report.render_markdown(),
    }
    for path, text in outputs.items():
        path.write_text(text, encoding="utf-8")
    log.info("artifacts_written", paths=[str(p) for p in outputs], passed=report.passed)

    json_path, md_path = outputs
    return str(json_path), str(md_path)
