"""Rule engine: run configuration, per-file and project-level rule
execution, suppression comments, and diagnostic collection."""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import catalog
from .catalog import ModeGate, RuleDescriptor, Scope, Severity
from .frontend import ParseFailure, SourceUnit, Span, node_span
from .semantics import SemanticModel, SignatureTable, build_model

DEVELOPMENT = "development"
PRODUCTION = "production"

# Pseudo rule id for tool notices (e.g. malformed suppression comments).
NOTICE_ID = "ML00"


@dataclass(frozen=True)
class Diagnostic:
    rule_id: str
    name: str
    path: str
    line: int
    column: int
    span: Optional[Span]
    message: str
    severity: str
    stages: tuple[str, ...]
    effects: tuple[str, ...]
    advice: str

    @property
    def sort_key(self):
        return (self.path, self.line, self.column, self.rule_id)


@dataclass
class RunConfig:
    select: Optional[frozenset[str]] = None  # None = all rules
    ignore: frozenset[str] = frozenset()
    mode: str = DEVELOPMENT
    rule_params: dict[str, dict] = field(default_factory=dict)
    signatures_path: Optional[str] = None
    timestamps: bool = False

    def enabled_ids(self) -> set[str]:
        ids = set(self.select) if self.select is not None else set(catalog.ALL_RULE_IDS)
        return ids - set(self.ignore)

    def params_for(self, rule_id: str) -> dict:
        return self.rule_params.get(rule_id, {})


@dataclass
class Finding:
    """Raw rule output before being joined with catalog metadata."""

    node: ast.AST
    message: str


# Per-file rule registry: rule id -> check(model, params) -> list[Finding].
PER_FILE_RULES: dict[str, Callable[[SemanticModel, dict], list[Finding]]] = {}


def rule(rule_id: str):
    if rule_id not in catalog.RULES_BY_ID:
        raise ValueError(f"cannot register unknown rule {rule_id}")

    def register(fn):
        PER_FILE_RULES[rule_id] = fn
        return fn

    return register


@dataclass
class FileFacts:
    """Per-file contribution to project-level facts."""

    path: str
    seeds: set[str] = field(default_factory=set)  # library families seeded
    deterministic: bool = False
    # (family, line, column, span) per random-API call site, in source order
    random_sites: list[tuple[str, int, int, Span]] = field(default_factory=list)
    torch_import: Optional[tuple[int, int, Span]] = None


@dataclass
class ProjectFacts:
    """Merged cross-file aggregates; merging is order-independent."""

    seeds: set[str] = field(default_factory=set)
    deterministic: bool = False
    per_file: dict[str, FileFacts] = field(default_factory=dict)

    def add(self, facts: FileFacts) -> None:
        self.seeds |= facts.seeds
        self.deterministic = self.deterministic or facts.deterministic
        self.per_file[facts.path] = facts


def extract_file_facts(model: SemanticModel) -> FileFacts:
    sig = model.signatures
    facts = FileFacts(path=model.unit.path)
    for fact in model.call_index:
        if fact.callee is None:
            continue
        if fact.callee == "torch.use_deterministic_algorithms":
            if any(isinstance(a, ast.Constant) and a.value is True
                   for a in fact.node.args):
                facts.deterministic = True
        for family, spec in sig.random.items():
            if fact.callee in spec["seeds"]:
                facts.seeds.add(family)
            elif fact.callee in spec["apis"]:
                facts.random_sites.append(
                    (family, fact.span.line, fact.span.column, fact.span)
                )
    facts.torch_import = _first_import_of(model.unit, "torch")
    return facts


def _first_import_of(unit: SourceUnit, module: str) -> Optional[tuple[int, int, Span]]:
    assert unit.tree is not None
    for node in ast.walk(unit.tree):
        names: list[str] = []
        if isinstance(node, ast.Import):
            names = [a.name for a in node.names]
        elif isinstance(node, ast.ImportFrom) and node.module and not node.level:
            names = [node.module]
        for name in names:
            if name == module or name.startswith(module + "."):
                span = node_span(unit, node)
                return (span.line, span.column, span)
    return None


@dataclass
class RunResult:
    diagnostics: list[Diagnostic]
    parse_failures: list[tuple[str, ParseFailure]]
    tool_errors: list[str]
    file_count: int

    @property
    def exit_code(self) -> int:
        return 1 if (self.diagnostics or self.parse_failures) else 0


def _make_diag(desc: RuleDescriptor, path: str, span: Span, message: str) -> Diagnostic:
    return Diagnostic(
        rule_id=desc.id,
        name=desc.name,
        path=path,
        line=span.line,
        column=span.column,
        span=span,
        message=message,
        severity=desc.severity.value,
        stages=tuple(s.value for s in desc.stages),
        effects=tuple(e.value for e in desc.effects),
        advice=desc.advice,
    )


def _notice(path: str, line: int, message: str) -> Diagnostic:
    return Diagnostic(
        rule_id=NOTICE_ID, name="Tool Notice", path=path, line=line, column=1,
        span=None, message=message, severity=Severity.INFO.value,
        stages=(), effects=(), advice="",
    )


def run(units: list[SourceUnit], config: RunConfig,
        signatures: Optional[SignatureTable] = None) -> RunResult:
    """Two-phase run: per-file rules + fact extraction, then project rules."""
    # Rule modules register themselves on import.
    from . import rules  # noqa: F401

    if signatures is None:
        signatures = SignatureTable.load(config.signatures_path)

    enabled = config.enabled_ids()
    if config.mode == PRODUCTION:
        enabled = {
            rid for rid in enabled
            if catalog.RULES_BY_ID[rid].mode_gate is ModeGate.ALWAYS
        }

    units = sorted(units, key=lambda u: u.path)
    diagnostics: list[Diagnostic] = []
    parse_failures: list[tuple[str, ParseFailure]] = []
    tool_errors: list[str] = []
    project = ProjectFacts()
    models: dict[str, SemanticModel] = {}

    for unit in units:
        if not unit.ok:
            assert unit.failure is not None
            parse_failures.append((unit.path, unit.failure))
            continue
        model = build_model(unit, signatures)
        models[unit.path] = model
        project.add(extract_file_facts(model))
        for rid in sorted(PER_FILE_RULES):
            if rid not in enabled:
                continue
            desc = catalog.RULES_BY_ID[rid]
            params = dict(config.params_for(rid))
            params.setdefault("mode", config.mode)
            try:
                findings = PER_FILE_RULES[rid](model, params)
            except Exception as exc:  # containment: one rule, one file
                tool_errors.append(f"{rid} failed on {unit.path}: {exc!r}")
                continue
            for finding in findings:
                span = node_span(unit, finding.node)
                diagnostics.append(_make_diag(desc, unit.path, span, finding.message))

    diagnostics.extend(_project_rules(project, enabled))

    for unit in units:
        if unit.ok:
            diagnostics = _apply_suppressions(unit, diagnostics)

    diagnostics.sort(key=lambda d: d.sort_key)
    return RunResult(
        diagnostics=diagnostics,
        parse_failures=sorted(parse_failures, key=lambda p: p[0]),
        tool_errors=sorted(tool_errors),
        file_count=len(units),
    )


def _project_rules(project: ProjectFacts, enabled: set[str]) -> list[Diagnostic]:
    out: list[Diagnostic] = []
    if "ML13" in enabled and not project.deterministic:
        desc = catalog.RULES_BY_ID["ML13"]
        torch_used = any(f.torch_import for f in project.per_file.values())
        if torch_used:
            for path in sorted(project.per_file):
                imp = project.per_file[path].torch_import
                if imp is None:
                    continue
                out.append(_make_diag(
                    desc, path, imp[2],
                    "torch is used but torch.use_deterministic_algorithms(True) "
                    "is never called in this project",
                ))
    if "ML14" in enabled:
        desc = catalog.RULES_BY_ID["ML14"]
        for path in sorted(project.per_file):
            facts = project.per_file[path]
            seen_families: set[str] = set()
            for family, line, column, span in facts.random_sites:
                if family in project.seeds or family in seen_families:
                    continue
                seen_families.add(family)
                out.append(_make_diag(
                    desc, path, span,
                    f"{family} random API used but no {family} random seed is "
                    "set anywhere in this project",
                ))
    return out


_SUPPRESS_RE = re.compile(r"#\s*mlint:\s*disable=(\S*)")
_RULE_ID_RE = re.compile(r"^ML\d{2}$")


def parse_suppressions(unit: SourceUnit) -> tuple[dict[int, set[str]], list[Diagnostic]]:
    """Extract per-line suppression sets from comments.

    Returns (line -> suppressed ids or {"all"}, notices for malformed ids).
    """
    suppressed: dict[int, set[str]] = {}
    notices: list[Diagnostic] = []
    for line, comment in sorted(unit.comments.items()):
        matches = list(_SUPPRESS_RE.finditer(comment))
        if not matches:
            continue
        tokens = [t for m in matches for t in m.group(1).split(",") if t]
        if not tokens:
            notices.append(_notice(
                unit.path, line, "empty mlint suppression comment"))
            continue
        ids: set[str] = set()
        for token in tokens:
            if token == "all":
                ids.add("all")
            elif _RULE_ID_RE.match(token) and token in catalog.RULES_BY_ID:
                ids.add(token)
            else:
                notices.append(_notice(
                    unit.path, line,
                    f"unknown rule id '{token}' in suppression comment"))
        if ids:
            suppressed.setdefault(line, set()).update(ids)
    return suppressed, notices


def _apply_suppressions(unit: SourceUnit, diagnostics: list[Diagnostic]) -> list[Diagnostic]:
    suppressed, notices = parse_suppressions(unit)
    kept: list[Diagnostic] = []
    for diag in diagnostics:
        if diag.path == unit.path and diag.line in suppressed:
            ids = suppressed[diag.line]
            if "all" in ids or diag.rule_id in ids:
                continue
        kept.append(diag)
    kept.extend(notices)
    return kept
