"""Alias resolution and provenance inference."""

import ast

from mlint import semantics

from conftest import model_for, parse_source


def aliases_for(source):
    unit = parse_source(source)
    assert unit.ok
    return semantics.resolve_aliases(unit)


def test_plain_import_alias():
    table = aliases_for("import pandas as pd\n")
    assert table.resolve_parts(["pd", "read_csv"]) == "pandas.read_csv"


def test_from_import_symbol():
    table = aliases_for("from sklearn.svm import SVC\n")
    assert table.resolve_parts(["SVC"]) == "sklearn.svm.SVC"


def test_from_import_with_rename():
    table = aliases_for("from numpy import log as ln\n")
    assert table.resolve_parts(["ln"]) == "numpy.log"


def test_last_writer_wins():
    table = aliases_for("import numpy as xp\nimport torch as xp\n")
    assert table.resolve_parts(["xp", "zeros"]) == "torch.zeros"


def test_star_import_is_ignored():
    table = aliases_for("from numpy import *\n")
    assert table.resolve_parts(["log"]) is None


def last_value_prov(model):
    assign = model.unit.tree.body[-1]
    assert isinstance(assign, ast.Assign)
    return model.prov(assign.value)


def test_constructor_provenance(signatures):
    model = model_for(
        "import pandas as pd\ndf = pd.DataFrame({'a': [1]})\n", signatures
    )
    assert last_value_prov(model).tag == semantics.DATAFRAME


def test_method_provenance_propagates(signatures):
    model = model_for(
        "import pandas as pd\n"
        "df = pd.DataFrame({'a': [1]})\n"
        "clean = df.dropna()\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.DATAFRAME


def test_subscript_of_dataframe_is_series(signatures):
    model = model_for(
        "import pandas as pd\n"
        "df = pd.DataFrame({'a': [1]})\n"
        "col = df['a']\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.SERIES


def test_rank_inferred_from_literal_shape(signatures):
    model = model_for("import numpy as np\nm = np.zeros((2, 3))\n", signatures)
    prov = last_value_prov(model)
    assert prov.tag == semantics.NDARRAY
    assert prov.rank == 2


def test_rank_inferred_from_nested_list(signatures):
    model = model_for("import numpy as np\nm = np.array([[1], [2]])\n", signatures)
    assert last_value_prov(model).rank == 2


def test_branch_join_conflicting_tags_is_unknown(signatures):
    model = model_for(
        "import pandas as pd\nimport numpy as np\n"
        "if flag:\n    x = pd.DataFrame()\nelse:\n    x = np.zeros(3)\n"
        "y = x\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.UNKNOWN


def test_branch_join_agreeing_tags_is_kept(signatures):
    model = model_for(
        "import pandas as pd\n"
        "if flag:\n    x = pd.DataFrame()\nelse:\n    x = pd.read_csv('f')\n"
        "y = x\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.DATAFRAME


def test_loop_body_does_not_clobber_preloop_env(signatures):
    model = model_for(
        "import pandas as pd\n"
        "df = pd.DataFrame()\n"
        "for i in range(3):\n    tmp = i\n"
        "after = df\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.DATAFRAME


def test_reassignment_changes_tag(signatures):
    model = model_for(
        "import pandas as pd\n"
        "x = pd.DataFrame()\n"
        "x = 3\n"
        "y = x\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.UNKNOWN


def test_function_scope_is_isolated(signatures):
    model = model_for(
        "import pandas as pd\n"
        "def helper():\n"
        "    local = pd.DataFrame()\n"
        "    return local\n"
        "x = unknown_thing\n",
        signatures,
    )
    assert last_value_prov(model).tag == semantics.UNKNOWN


def test_model_subclass_registered(signatures):
    model = model_for(
        "import torch\nfrom torch import nn\n"
        "class Net(nn.Module):\n    pass\n"
        "m = Net()\n",
        signatures,
    )
    assert "Net" in model.model_classes
    assert last_value_prov(model).tag == semantics.MODEL


def test_call_index_covers_nested_calls(signatures):
    model = model_for("f(g(1), h(2))\n", signatures)
    assert len(model.call_index) == 3


def test_imports_library(signatures):
    model = model_for("from torch import nn\n", signatures)
    assert model.imports_library("torch")
    assert not model.imports_library("tensorflow")


def test_loss_basename_heuristic(signatures):
    model = model_for("loss = criterion(a, b)\n", signatures)
    prov = last_value_prov(model)
    assert prov.tag == semantics.TENSOR
    assert prov.via == "loss"


def test_signature_table_loads_from_path(tmp_path):
    custom = tmp_path / "sigs.toml"
    custom.write_text(
        'version = 1\n[constructors]\n"mylib.make" = "DataFrame"\n',
        encoding="utf-8",
    )
    table = semantics.SignatureTable.load(str(custom))
    assert table.constructors["mylib.make"] == "DataFrame"
