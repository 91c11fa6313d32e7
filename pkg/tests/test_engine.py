"""Engine orchestration: ordering, selection, mode gating, suppression."""

from mlint import catalog
from mlint.engine import DEVELOPMENT, NOTICE_ID, PRODUCTION, RunConfig

from conftest import rule_ids, run_source, run_sources


SMELLY = "import pandas as pd\ndf = pd.read_csv('x.csv')\ncell = df['a']['b']\n"


def test_every_rule_has_an_implementation():
    from mlint.engine import PER_FILE_RULES
    covered = set(PER_FILE_RULES) | {"ML13", "ML14"}
    assert covered == set(catalog.ALL_RULE_IDS)


def test_diagnostics_sorted_by_location():
    result = run_sources({
        "b.py": SMELLY,
        "a.py": SMELLY,
    })
    keys = [d.sort_key for d in result.diagnostics]
    assert keys == sorted(keys)


def test_select_restricts_rules():
    result = run_source(SMELLY, config=RunConfig(select=frozenset({"ML03"})))
    assert set(rule_ids(result)) == {"ML03"}


def test_ignore_removes_rules():
    result = run_source(SMELLY, config=RunConfig(ignore=frozenset({"ML03"})))
    ids = rule_ids(result)
    assert "ML03" not in ids
    assert "ML04" in ids


def test_production_mode_gates_development_rules():
    source = "import torch\nx = torch.rand(3)\n"
    dev = run_source(source, config=RunConfig(mode=DEVELOPMENT))
    prod = run_source(source, config=RunConfig(mode=PRODUCTION))
    assert {"ML13", "ML14"} <= set(rule_ids(dev))
    assert {"ML13", "ML14"}.isdisjoint(rule_ids(prod))


def test_exit_code_zero_when_clean():
    result = run_source("x = 1\n")
    assert result.exit_code == 0
    assert result.diagnostics == []


def test_exit_code_one_on_findings():
    assert run_source(SMELLY).exit_code == 1


def test_parse_failure_reported_and_nonzero_exit():
    result = run_source("def broken(:\n")
    assert result.exit_code == 1
    assert len(result.parse_failures) == 1
    assert result.diagnostics == []


def test_parse_failure_does_not_block_other_files():
    result = run_sources({
        "bad.py": "def broken(:\n",
        "good.py": SMELLY,
    })
    assert len(result.parse_failures) == 1
    assert "ML03" in rule_ids(result)


def test_suppress_single_rule():
    result = run_source(
        "import pandas as pd\n"
        "df = pd.DataFrame({'a': [1]})\n"
        "cell = df['a']['b']  # mlint: disable=ML03\n"
    )
    assert "ML03" not in rule_ids(result)


def test_suppress_leaves_other_rules_on_same_line():
    result = run_source(
        "import pandas as pd\n"
        "df = pd.read_csv('x.csv')  # mlint: disable=ML03\n"
    )
    assert "ML04" in rule_ids(result)


def test_suppress_all_on_line():
    result = run_source(
        "import pandas as pd\n"
        "df = pd.read_csv('x.csv')  # mlint: disable=all\n"
    )
    assert rule_ids(result) == []


def test_suppress_list_of_rules():
    result = run_source(
        "import pandas as pd\n"
        "df = pd.DataFrame({'a': [1]})\n"
        "right = pd.DataFrame({'a': [1]})\n"
        "out = df.merge(right)\n"
        "cell = df['a']['b']  # mlint: disable=ML03,ML08\n"
    )
    ids = rule_ids(result)
    assert "ML03" not in ids
    assert "ML06" in ids


def test_malformed_suppression_produces_notice():
    result = run_source("x = 1  # mlint: disable=ML99\n")
    notices = [d for d in result.diagnostics if d.rule_id == NOTICE_ID]
    assert len(notices) == 1
    assert notices[0].severity == "info"


def test_project_merge_is_order_independent():
    sources = {
        "a.py": "import numpy as np\nx = np.random.rand(3)\n",
        "b.py": "import numpy as np\nnp.random.seed(0)\n",
        "c.py": "import torch\ny = torch.zeros(1)\n",
    }
    forward = run_sources(sources)
    backward = run_sources(dict(reversed(list(sources.items()))))
    assert [d.sort_key for d in forward.diagnostics] == \
        [d.sort_key for d in backward.diagnostics]


def test_rule_crash_is_contained(monkeypatch):
    import mlint.engine as engine

    def boom(model, params):
        raise RuntimeError("synthetic rule failure")

    monkeypatch.setitem(engine.PER_FILE_RULES, "ML01", boom)
    result = run_source(SMELLY)
    assert any("ML01" in err for err in result.tool_errors)
    assert "ML04" in rule_ids(result)  # other rules still ran


def test_rule_params_reach_rules():
    config = RunConfig(rule_params={"ML09": {"unknown_rank_info": False}})
    result = run_source(
        "import numpy as np\na = np.asarray(p)\nb = np.asarray(q)\n"
        "c = np.dot(a, b)\n",
        config=config,
    )
    assert "ML09" not in rule_ids(result)
