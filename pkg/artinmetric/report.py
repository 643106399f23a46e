"""Verification report model, rendered to Markdown through Jinja2 and to JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from jinja2 import Environment, FileSystemLoader

_TEMPLATES_DIR = Path(__file__).parent / "templates"

MAX_COUNTEREXAMPLES = 5


def _jinja_env() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(_TEMPLATES_DIR)),
        autoescape=False,
        trim_blocks=True,
        lstrip_blocks=True,
    )


@dataclass
class CheckResult:
    """Outcome of one oracle or property check."""

    name: str
    checked: int = 0
    failures: int = 0
    counterexamples: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, example: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(example)

    def as_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures,
            "counterexamples": list(self.counterexamples),
        }


@dataclass
class VerificationReport:
    k: int
    gens: str
    radius: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def checked(self) -> int:
        return sum(c.checked for c in self.checks)

    @property
    def failures(self) -> int:
        return sum(c.failures for c in self.checks)

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"status={status} k={self.k} gens={self.gens} radius={self.radius} "
            f"checks={len(self.checks)} checked={self.checked} failures={self.failures}"
        )

    @property
    def stem(self) -> str:
        """Artifact file stem; no timestamps so reruns overwrite."""
        return f"verify-k{self.k}-{self.gens}-r{self.radius}"

    def render_markdown(self) -> str:
        return _jinja_env().get_template("report_markdown.j2").render(r=self)

    def to_json(self) -> str:
        return json.dumps(
            {
                "k": self.k,
                "gens": self.gens,
                "radius": self.radius,
                "passed": self.passed,
                "summary": self.summary_line(),
                "checks": [c.as_dict() for c in self.checks],
            },
            indent=2,
        )
