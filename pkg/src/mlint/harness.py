"""Fixture corpus verification.

Fixture files annotate expected findings with `# expect: ML03[,ML08...]`
comments on the smelly line.  Each fixture directory is analyzed as its own
project, so project-level rules (seed presence, deterministic option) are
judged per directory rather than across the whole corpus.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import catalog, frontend
from .engine import NOTICE_ID, RunConfig, run

_EXPECT_RE = re.compile(r"#\s*expect:\s*(.*)$")


class HarnessError(Exception):
    pass


@dataclass(frozen=True)
class Expectation:
    path: str
    line: int
    rule_id: str


def collect_expectations(fixture_dir: str) -> list[Expectation]:
    """One Expectation per rule id per annotated fixture line."""
    expectations: list[Expectation] = []
    for file in sorted(Path(fixture_dir).rglob("*.py")):
        unit = frontend.parse(str(file), file.read_text(encoding="utf-8"))
        if not unit.ok:
            assert unit.failure is not None
            raise HarnessError(
                f"{file}:{unit.failure.line}: fixture does not parse: "
                f"{unit.failure.message}"
            )
        for line, comment in sorted(unit.comments.items()):
            m = _EXPECT_RE.search(comment)
            if m is None:
                continue
            tokens = [t.strip() for t in m.group(1).split(",")]
            if not tokens or any(not t for t in tokens):
                raise HarnessError(f"{file}:{line}: malformed expectation comment")
            for token in tokens:
                if token not in catalog.RULES_BY_ID:
                    raise HarnessError(
                        f"{file}:{line}: unknown rule id in expectation: {token}"
                    )
                expectations.append(Expectation(str(file), line, token))
    return expectations


@dataclass
class VerifyReport:
    missing: list[Expectation] = field(default_factory=list)  # false negatives
    unexpected: list[Expectation] = field(default_factory=list)  # false positives
    expectation_count: int = 0
    file_count: int = 0

    @property
    def passed(self) -> bool:
        return not self.missing and not self.unexpected

    def render(self) -> str:
        lines = [
            f"{self.file_count} fixture files, "
            f"{self.expectation_count} expectations"
        ]
        for exp in self.missing:
            lines.append(
                f"MISSING    {exp.path}:{exp.line}: expected {exp.rule_id}"
            )
        for exp in self.unexpected:
            lines.append(
                f"UNEXPECTED {exp.path}:{exp.line}: got {exp.rule_id}"
            )
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"


def verify(fixture_dir: str, config: Optional[RunConfig] = None) -> VerifyReport:
    """Diff expected vs actual diagnostics over the fixture corpus."""
    config = config or RunConfig()
    expectations = collect_expectations(fixture_dir)
    expected = set(expectations)

    files = sorted(Path(fixture_dir).rglob("*.py"))
    by_dir: dict[Path, list[Path]] = {}
    for file in files:
        by_dir.setdefault(file.parent, []).append(file)

    actual: set[Expectation] = set()
    for directory in sorted(by_dir):
        units = [
            frontend.parse(str(f), f.read_text(encoding="utf-8"))
            for f in by_dir[directory]
        ]
        result = run(units, config)
        for diag in result.diagnostics:
            if diag.rule_id == NOTICE_ID:
                continue
            actual.add(Expectation(diag.path, diag.line, diag.rule_id))

    report = VerifyReport(
        missing=sorted(expected - actual, key=lambda e: (e.path, e.line, e.rule_id)),
        unexpected=sorted(actual - expected, key=lambda e: (e.path, e.line, e.rule_id)),
        expectation_count=len(expected),
        file_count=len(files),
    )
    return report
