"""Command line: discovery, config loading, flags, exit codes."""

import io
import json

import pytest

from mlint import cli


SMELLY = "import pandas as pd\ndf = pd.read_csv('x.csv')\ncell = df['a']['b']\n"
CLEAN = "x = 1\n"


def invoke(argv):
    out = io.StringIO()
    code = cli.main(argv, stdout=out)
    return code, out.getvalue()


@pytest.fixture
def project(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(cli.CONFIG_ENV_VAR, raising=False)
    (tmp_path / "smelly.py").write_text(SMELLY, encoding="utf-8")
    (tmp_path / "clean.py").write_text(CLEAN, encoding="utf-8")
    return tmp_path


def test_discover_sorts_and_skips_hidden(tmp_path):
    (tmp_path / "pkg").mkdir()
    (tmp_path / "pkg" / "b.py").write_text(CLEAN)
    (tmp_path / "pkg" / "a.py").write_text(CLEAN)
    (tmp_path / ".hidden").mkdir()
    (tmp_path / ".hidden" / "c.py").write_text(CLEAN)
    (tmp_path / "__pycache__").mkdir()
    (tmp_path / "__pycache__" / "d.py").write_text(CLEAN)
    files = cli.discover([str(tmp_path)])
    names = [f.rsplit("/", 1)[-1] for f in files]
    assert names == ["a.py", "b.py"]


def test_missing_path_is_usage_error(project):
    code, _ = invoke(["no-such-file.py"])
    assert code == 2


def test_no_arguments_is_usage_error(project):
    code, _ = invoke([])
    assert code == 2


def test_exit_one_with_findings(project):
    code, out = invoke(["smelly.py"])
    assert code == 1
    assert "ML03" in out


def test_exit_zero_when_clean(project):
    code, out = invoke(["clean.py"])
    assert code == 0
    assert "0 smells" in out


def test_json_format(project):
    code, out = invoke(["smelly.py", "--format", "json"])
    assert code == 1
    doc = json.loads(out)
    assert doc["tool"] == "mlint"


def test_sarif_format(project):
    _, out = invoke(["smelly.py", "--format", "sarif"])
    doc = json.loads(out)
    assert doc["version"] == "2.1.0"


def test_output_file(project):
    code, out = invoke(["smelly.py", "--output", "report.txt"])
    assert code == 1
    assert out == ""
    assert "ML03" in (project / "report.txt").read_text()


def test_select_flag(project):
    _, out = invoke(["smelly.py", "--select", "ML04"])
    assert "ML04" in out
    assert "ML03" not in out


def test_ignore_flag(project):
    _, out = invoke(["smelly.py", "--ignore", "ML04"])
    assert "ML03" in out
    assert "ML04" not in out


def test_bad_rule_id_is_usage_error(project):
    code, _ = invoke(["smelly.py", "--select", "ML99"])
    assert code == 2


def test_list_rules(project):
    code, out = invoke(["--list-rules"])
    assert code == 0
    assert len(out.strip().splitlines()) == 22


def test_explain(project):
    code, out = invoke(["--explain", "ML20"])
    assert code == 0
    assert "Gradients Not Cleared" in out


def test_explain_unknown_rule(project):
    code, _ = invoke(["--explain", "ML99"])
    assert code == 2


def test_config_file_ignore(project):
    (project / "mlint.toml").write_text(
        '[rules]\nignore = ["ML03"]\n', encoding="utf-8"
    )
    _, out = invoke(["smelly.py"])
    assert "ML03" not in out
    assert "ML04" in out


def test_config_rule_params(project):
    (project / "mlint.toml").write_text(
        "[rules.ML11]\noptimizer_requires_keyword = false\n", encoding="utf-8"
    )
    code, _ = invoke(["clean.py"])
    assert code == 0


def test_config_env_var(project, monkeypatch):
    other = project / "alt.toml"
    other.write_text('[rules]\nselect = ["ML04"]\n', encoding="utf-8")
    monkeypatch.setenv(cli.CONFIG_ENV_VAR, str(other))
    _, out = invoke(["smelly.py"])
    assert "ML04" in out
    assert "ML03" not in out


def test_malformed_config_is_usage_error(project):
    (project / "mlint.toml").write_text("not toml ][", encoding="utf-8")
    code, _ = invoke(["smelly.py"])
    assert code == 2


def test_unknown_rule_in_config_is_usage_error(project):
    (project / "mlint.toml").write_text("[rules.ML99]\nx = 1\n", encoding="utf-8")
    code, _ = invoke(["smelly.py"])
    assert code == 2


def test_invalid_mode_in_config_is_usage_error(project):
    (project / "mlint.toml").write_text('mode = "turbo"\n', encoding="utf-8")
    code, _ = invoke(["smelly.py"])
    assert code == 2


def test_cli_select_overrides_config_ignore(project):
    (project / "mlint.toml").write_text(
        '[rules]\nignore = ["ML03"]\n', encoding="utf-8"
    )
    _, out = invoke(["smelly.py", "--select", "ML03"])
    assert "ML03" in out


def test_mode_flag(project):
    (project / "torchy.py").write_text(
        "import torch\nx = torch.rand(3)\n", encoding="utf-8"
    )
    _, dev_out = invoke(["torchy.py", "--mode", "development"])
    _, prod_out = invoke(["torchy.py", "--mode", "production"])
    assert "ML13" in dev_out and "ML14" in dev_out
    assert "ML13" not in prod_out and "ML14" not in prod_out


def test_version_flag_exits_zero(project, capsys):
    code, _ = invoke(["--version"])
    assert code == 0


def test_unknown_flag_exits_two(project, capsys):
    code, _ = invoke(["--frobnicate"])
    assert code == 2


def test_parse_failure_exit_one(project):
    (project / "broken.py").write_text("def broken(:\n", encoding="utf-8")
    code, out = invoke(["broken.py"])
    assert code == 1
    assert "parse error" in out


def test_custom_signatures_flag(project):
    custom = project / "sigs.toml"
    custom.write_text(
        'version = 1\n[constructors]\n"mypd.load" = "DataFrame"\n'
        "[subscripts]\nDataFrame = \"Series\"\n",
        encoding="utf-8",
    )
    (project / "custom.py").write_text(
        "import mypd\ndf = mypd.load()\ncell = df['a']['b']\n", encoding="utf-8"
    )
    _, out = invoke(["custom.py", "--signatures", str(custom)])
    assert "ML03" in out
