"""Command-line entry point: argument parsing, config loading, file
discovery and orchestration.

Exit codes: 0 = clean, 1 = smells or parse failures found, 2 = usage or
configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

import tomli

from . import __version__, catalog, frontend, reporting
from .engine import DEVELOPMENT, PRODUCTION, RunConfig, run

DEFAULT_CONFIG_NAME = "mlint.toml"
CONFIG_ENV_VAR = "MLINT_CONFIG"

EXCLUDED_DIRS = {"__pycache__", ".git", ".hg", ".tox", ".venv", "venv",
                 "node_modules", "build", "dist", ".eggs"}


class UsageError(Exception):
    pass


def discover(paths: list[str], excluded: Optional[set[str]] = None) -> list[str]:
    """Collect .py files from files/directories, sorted lexicographically."""
    excluded = EXCLUDED_DIRS if excluded is None else excluded
    found: set[str] = set()
    for raw in paths:
        path = Path(raw)
        if not path.exists():
            raise UsageError(f"path does not exist: {raw}")
        if path.is_file():
            found.add(str(path))
            continue
        for sub in path.rglob("*.py"):
            parts = sub.relative_to(path).parts
            if any(p.startswith(".") or p in excluded for p in parts[:-1]):
                continue
            found.add(str(sub))
    return sorted(found)


def _parse_rule_list(raw: str, where: str) -> frozenset[str]:
    ids = frozenset(token.strip() for token in raw.split(",") if token.strip())
    unknown = sorted(i for i in ids if i not in catalog.RULES_BY_ID)
    if unknown:
        raise UsageError(f"unknown rule id(s) in {where}: {', '.join(unknown)}")
    return ids


def load_config(path: Optional[str]) -> RunConfig:
    """Load mlint.toml (explicit path, $MLINT_CONFIG, or ./mlint.toml)."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path is None and Path(DEFAULT_CONFIG_NAME).is_file():
        path = DEFAULT_CONFIG_NAME
    config = RunConfig()
    if path is None:
        return config
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except FileNotFoundError:
        raise UsageError(f"config file not found: {path}")
    except tomli.TOMLDecodeError as exc:
        raise UsageError(f"malformed config {path}: {exc}")

    mode = data.get("mode", DEVELOPMENT)
    if mode not in (DEVELOPMENT, PRODUCTION):
        raise UsageError(f"invalid mode in {path}: {mode!r}")
    config.mode = mode
    if "signatures" in data:
        config.signatures_path = str(data["signatures"])

    rules = data.get("rules", {})
    if not isinstance(rules, dict):
        raise UsageError(f"[rules] must be a table in {path}")
    params: dict[str, dict] = {}
    for key, value in rules.items():
        if key == "select":
            config.select = _parse_rule_list(",".join(value), f"{path} [rules] select")
        elif key == "ignore":
            config.ignore = _parse_rule_list(",".join(value), f"{path} [rules] ignore")
        elif key in catalog.RULES_BY_ID:
            if not isinstance(value, dict):
                raise UsageError(f"[rules.{key}] must be a table in {path}")
            params[key] = dict(value)
        else:
            raise UsageError(f"unknown rule id in {path}: {key}")
    config.rule_params = params
    return config


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlint",
        description="Detect machine-learning-specific code smells in Python "
                    "source files.",
    )
    parser.add_argument("paths", nargs="*", help="files or directories to analyze")
    parser.add_argument("--format", choices=("text", "json", "sarif"),
                        default="text", help="output format (default: text)")
    parser.add_argument("--select", metavar="IDS",
                        help="comma-separated rule ids to enable exclusively")
    parser.add_argument("--ignore", metavar="IDS",
                        help="comma-separated rule ids to disable")
    parser.add_argument("--mode", choices=(DEVELOPMENT, PRODUCTION),
                        help="analysis mode (default: development)")
    parser.add_argument("--config", metavar="PATH", help="config file path")
    parser.add_argument("--signatures", metavar="PATH",
                        help="override the bundled API signature table")
    parser.add_argument("--explain", metavar="ID",
                        help="print the catalog entry for one rule and exit")
    parser.add_argument("--list-rules", action="store_true",
                        help="list all rules and exit")
    parser.add_argument("--output", metavar="PATH",
                        help="write the report to a file instead of stdout")
    parser.add_argument("--timestamps", action="store_true",
                        help="include timestamps in JSON/SARIF output")
    parser.add_argument("--version", action="version",
                        version=f"mlint {__version__}")
    return parser


def main(argv: Optional[list[str]] = None, stdout=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help/--version
        return 0 if exc.code in (None, 0) else 2

    try:
        return _run(args, stdout)
    except UsageError as exc:
        print(f"mlint: error: {exc}", file=sys.stderr)
        return 2


def _run(args: argparse.Namespace, stdout) -> int:
    if args.list_rules:
        stdout.write(reporting.list_rules())
        return 0
    if args.explain:
        if args.explain not in catalog.RULES_BY_ID:
            raise UsageError(f"unknown rule id: {args.explain}")
        stdout.write(reporting.explain(args.explain))
        return 0
    if not args.paths:
        raise UsageError("no input paths given (or use --list-rules/--explain)")

    config = load_config(args.config)
    if args.mode:
        config.mode = args.mode
    if args.signatures:
        config.signatures_path = args.signatures
    if args.timestamps:
        config.timestamps = True
    if args.select:
        selected = _parse_rule_list(args.select, "--select")
        config.select = selected
        # Command line wins over config-file ignores for these ids.
        config.ignore = config.ignore - selected
    if args.ignore:
        config.ignore = config.ignore | _parse_rule_list(args.ignore, "--ignore")

    files = discover(args.paths)
    units = []
    for file in files:
        try:
            text = Path(file).read_text(encoding="utf-8", errors="replace")
        except OSError as exc:
            raise UsageError(f"cannot read {file}: {exc}")
        units.append(frontend.parse(file, text))

    result = run(units, config)
    report = reporting.build_report(result, timestamps=config.timestamps)
    if args.format == "json":
        rendered = reporting.render_json(report)
    elif args.format == "sarif":
        rendered = reporting.render_sarif(report)
    else:
        rendered = reporting.render_text(report)

    if args.output:
        Path(args.output).write_text(rendered, encoding="utf-8")
    else:
        stdout.write(rendered)
    return result.exit_code


def entrypoint() -> None:
    raise SystemExit(main())
