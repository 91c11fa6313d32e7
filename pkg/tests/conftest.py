import pytest

from mlint import frontend
from mlint.engine import RunConfig, run
from mlint.semantics import SignatureTable, build_model


@pytest.fixture(scope="session")
def signatures():
    return SignatureTable.load()


def parse_source(source, path="test.py"):
    return frontend.parse(path, source)


def model_for(source, signatures, path="test.py"):
    unit = parse_source(source, path)
    assert unit.ok, unit.failure
    return build_model(unit, signatures)


def run_source(source, path="test.py", config=None):
    """Analyze one in-memory file and return the RunResult."""
    config = config or RunConfig()
    return run([parse_source(source, path)], config)


def run_sources(named_sources, config=None):
    """Analyze several in-memory files as one project."""
    config = config or RunConfig()
    units = [parse_source(src, path) for path, src in named_sources.items()]
    return run(units, config)


def rule_ids(result):
    return [d.rule_id for d in result.diagnostics]
