"""Render run results as human text, machine JSON, or SARIF 2.1.0."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Optional

from . import __version__, TOOL_NAME, catalog
from .engine import Diagnostic, RunResult

SARIF_SCHEMA = "https://json.schemastore.org/sarif-2.1.0.json"

_SEVERITY_TO_SARIF = {"warning": "warning", "info": "note"}


@dataclass
class Report:
    file_count: int
    diagnostics: list[Diagnostic]
    parse_failures: list[tuple[str, object]]
    tool_errors: list[str]
    timestamp: Optional[str] = None

    @property
    def rule_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for diag in self.diagnostics:
            counts[diag.rule_id] = counts.get(diag.rule_id, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def effect_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for diag in self.diagnostics:
            for effect in diag.effects:
                counts[effect] = counts.get(effect, 0) + 1
        return dict(sorted(counts.items()))


def build_report(result: RunResult, timestamps: bool = False) -> Report:
    stamp = None
    if timestamps:
        stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    return Report(
        file_count=result.file_count,
        diagnostics=list(result.diagnostics),
        parse_failures=list(result.parse_failures),
        tool_errors=list(result.tool_errors),
        timestamp=stamp,
    )


def render_text(report: Report) -> str:
    lines = []
    for diag in report.diagnostics:
        lines.append(
            f"{diag.path}:{diag.line}:{diag.column}: "
            f"{diag.rule_id} {diag.name}: {diag.message}"
        )
    for path, failure in report.parse_failures:
        lines.append(f"{path}:{failure.line}: parse error: {failure.message}")
    for error in report.tool_errors:
        lines.append(f"tool error: {error}")
    lines.append("")
    n = len(report.diagnostics)
    noun = "smell" if n == 1 else "smells"
    lines.append(f"{n} {noun} in {report.file_count} files")
    for rid, count in report.rule_counts.items():
        lines.append(f"  {rid}: {count}")
    return "\n".join(lines) + "\n"


def render_json(report: Report) -> str:
    doc = {
        "tool": TOOL_NAME,
        "version": __version__,
        "files": report.file_count,
        "diagnostics": [
            {
                "rule": d.rule_id,
                "name": d.name,
                "path": d.path,
                "line": d.line,
                "column": d.column,
                "severity": d.severity,
                "stage": list(d.stages),
                "effect": list(d.effects),
                "message": d.message,
                "advice": d.advice,
            }
            for d in report.diagnostics
        ],
        "summary": {
            "smells": len(report.diagnostics),
            "by_rule": report.rule_counts,
            "by_effect": report.effect_counts,
            "parse_failures": [
                {"path": path, "line": f.line, "message": f.message}
                for path, f in report.parse_failures
            ],
            "tool_errors": list(report.tool_errors),
        },
    }
    if report.timestamp is not None:
        doc["timestamp"] = report.timestamp
    return json.dumps(doc, indent=2) + "\n"


def render_sarif(report: Report) -> str:
    rule_index = {r.id: i for i, r in enumerate(catalog.RULES)}
    descriptors = [
        {
            "id": r.id,
            "name": r.name.replace(" ", ""),
            "shortDescription": {"text": r.name},
            "fullDescription": {"text": r.description},
            "help": {"text": r.advice},
            "defaultConfiguration": {
                "level": _SEVERITY_TO_SARIF[r.severity.value],
            },
            "properties": {
                "pipelineStage": [s.value for s in r.stages],
                "effect": [e.value for e in r.effects],
                "kind": r.kind,
            },
        }
        for r in catalog.RULES
    ]
    results = []
    for diag in report.diagnostics:
        result = {
            "ruleId": diag.rule_id,
            "level": _SEVERITY_TO_SARIF[diag.severity],
            "message": {"text": f"{diag.message}. {diag.advice}".strip()},
            "locations": [
                {
                    "physicalLocation": {
                        "artifactLocation": {"uri": diag.path},
                        "region": {
                            "startLine": diag.line,
                            "startColumn": diag.column,
                        },
                    }
                }
            ],
        }
        if diag.rule_id in rule_index:
            result["ruleIndex"] = rule_index[diag.rule_id]
        results.append(result)
    run = {
        "tool": {
            "driver": {
                "name": TOOL_NAME,
                "version": __version__,
                "informationUri": "https://example.invalid/mlint",
                "rules": descriptors,
            }
        },
        "results": results,
    }
    if report.timestamp is not None:
        run["invocations"] = [
            {"executionSuccessful": True, "startTimeUtc": report.timestamp}
        ]
    doc = {"version": "2.1.0", "$schema": SARIF_SCHEMA, "runs": [run]}
    return json.dumps(doc, indent=2) + "\n"


def explain(rule_id: str) -> str:
    desc = catalog.get_rule(rule_id)
    lines = [
        f"{desc.id}: {desc.name}",
        f"  Pipeline stage: {' & '.join(s.value for s in desc.stages)}",
        f"  Effect: {' & '.join(e.value for e in desc.effects)}",
        f"  Type: {desc.kind}",
        f"  Severity: {desc.severity.value}",
        f"  Checked: {'development mode only' if desc.mode_gate.value == 'development-only' else 'always'}",
        "",
        f"  {desc.description}",
        f"  Advice: {desc.advice}",
    ]
    return "\n".join(lines) + "\n"


def list_rules() -> str:
    lines = []
    for r in catalog.RULES:
        stages = " & ".join(s.value for s in r.stages)
        effects = " & ".join(e.value for e in r.effects)
        lines.append(f"{r.id}  {r.name}  [{stages}; {effects}; {r.kind}]")
    return "\n".join(lines) + "\n"
