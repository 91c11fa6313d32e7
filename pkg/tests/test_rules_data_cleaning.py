"""Rules ML01-ML09: dataframe and array handling."""

from conftest import rule_ids, run_source

PD = "import pandas as pd\ndf = pd.DataFrame({'a': [1.0], 'b': [2.0]})\n"


# ML01 Unnecessary Iteration

def test_ml01_iterrows_loop_flagged():
    result = run_source(PD + "out = []\nfor i, row in df.iterrows():\n    out.append(row[0] + 1)\n")
    assert "ML01" in rule_ids(result)


def test_ml01_anchored_on_loop_header():
    result = run_source(PD + "for i, row in df.iterrows():\n    pass\n")
    diag = next(d for d in result.diagnostics if d.rule_id == "ML01")
    assert diag.line == 3


def test_ml01_itertuples_flagged():
    result = run_source(PD + "for row in df.itertuples():\n    pass\n")
    assert "ML01" in rule_ids(result)


def test_ml01_vectorized_clean():
    result = run_source(PD + "out = df.add(1)\n")
    assert "ML01" not in rule_ids(result)


def test_ml01_iterrows_outside_loop_clean():
    # Materializing rows without a loop is not the iteration smell.
    result = run_source(PD + "rows = list(df.iterrows())\n")
    assert "ML01" not in rule_ids(result)


def test_ml01_plain_iteration_clean():
    result = run_source("for x in [1, 2]:\n    print(x)\n")
    assert rule_ids(result) == []


# ML02 NaN comparison

def test_ml02_equality_with_nan():
    result = run_source("import numpy as np\nflag = x == np.nan\n")
    assert "ML02" in rule_ids(result)


def test_ml02_inequality_with_nan():
    result = run_source("import numpy as np\nflag = x != np.nan\n")
    assert "ML02" in rule_ids(result)


def test_ml02_float_nan_literal():
    result = run_source("flag = x == float('nan')\n")
    assert "ML02" in rule_ids(result)


def test_ml02_math_nan():
    result = run_source("import math\nflag = x == math.nan\n")
    assert "ML02" in rule_ids(result)


def test_ml02_isna_clean():
    result = run_source(PD + "mask = df.isna()\n")
    assert "ML02" not in rule_ids(result)


def test_ml02_ordinary_compare_clean():
    result = run_source("flag = x == 3\n")
    assert rule_ids(result) == []


# ML03 Chain Indexing

def test_ml03_read_chain():
    result = run_source(PD + "cell = df['a']['b']\n")
    assert "ML03" in rule_ids(result)


def test_ml03_write_chain_message_mentions_silent_failure():
    result = run_source(PD + "df['a']['b'] = 1\n")
    diag = next(d for d in result.diagnostics if d.rule_id == "ML03")
    assert "silently" in diag.message


def test_ml03_loc_clean():
    result = run_source(PD + "cell = df.loc[:, ('a', 'b')]\n")
    assert "ML03" not in rule_ids(result)


def test_ml03_nested_list_clean():
    result = run_source("m = [[1, 2]]\nv = m[0][1]\n")
    assert rule_ids(result) == []


# ML04 Columns and DataType Not Explicitly Set

def test_ml04_bare_reader():
    result = run_source("import pandas as pd\ndf = pd.read_csv('x.csv')\n")
    ids = rule_ids(result)
    assert "ML04" in ids


def test_ml04_message_lists_missing_parameters():
    result = run_source("import pandas as pd\ndf = pd.read_csv('x.csv', dtype=str)\n")
    diag = next(d for d in result.diagnostics if d.rule_id == "ML04")
    assert "usecols" in diag.message
    assert "dtype" not in diag.message


def test_ml04_full_reader_clean():
    result = run_source(
        "import pandas as pd\n"
        "df = pd.read_csv('x.csv', usecols=['a'], dtype={'a': 'int64'})\n"
    )
    assert "ML04" not in rule_ids(result)


def test_ml04_severity_is_info():
    result = run_source("import pandas as pd\ndf = pd.read_csv('x.csv')\n")
    diag = next(d for d in result.diagnostics if d.rule_id == "ML04")
    assert diag.severity == "info"


# ML05 Empty Column Misinitialization

def test_ml05_zero_fill():
    result = run_source(PD + "df['new'] = 0\n")
    assert "ML05" in rule_ids(result)


def test_ml05_empty_string_fill():
    result = run_source(PD + "df['new'] = ''\n")
    assert "ML05" in rule_ids(result)


def test_ml05_nan_fill_clean():
    result = run_source("import numpy as np\n" + PD + "df['new'] = np.nan\n")
    assert "ML05" not in rule_ids(result)


def test_ml05_meaningful_value_clean():
    result = run_source(PD + "df['new'] = 7\n" + "df['other'] = compute()\n")
    assert "ML05" not in rule_ids(result)


# ML06 Merge API Parameter Not Explicitly Set

def test_ml06_bare_merge():
    result = run_source(PD + "right = pd.DataFrame({'a': [1]})\nout = df.merge(right)\n")
    assert "ML06" in rule_ids(result)


def test_ml06_full_merge_clean():
    result = run_source(
        PD + "right = pd.DataFrame({'a': [1]})\n"
        "out = df.merge(right, on='a', how='left', validate='1:1')\n"
    )
    assert "ML06" not in rule_ids(result)


def test_ml06_left_right_on_counts_as_key():
    result = run_source(
        PD + "right = pd.DataFrame({'c': [1]})\n"
        "out = df.merge(right, left_on='a', right_on='c', how='left', validate='1:1')\n"
    )
    assert "ML06" not in rule_ids(result)


# ML07 In-Place APIs Misused

def test_ml07_discarded_result():
    result = run_source(PD + "df.dropna()\n")
    assert "ML07" in rule_ids(result)


def test_ml07_discarded_numpy_clip():
    result = run_source("import numpy as np\na = np.array([1.5])\nnp.clip(a, 0, 1)\n")
    assert "ML07" in rule_ids(result)


def test_ml07_assigned_clean():
    result = run_source(PD + "df = df.dropna()\n")
    assert "ML07" not in rule_ids(result)


def test_ml07_inplace_true_clean():
    result = run_source(PD + "df.dropna(inplace=True)\n")
    assert "ML07" not in rule_ids(result)


def test_ml07_inplace_false_discarded_flagged():
    result = run_source(PD + "df.dropna(inplace=False)\n")
    assert "ML07" in rule_ids(result)


# ML08 Dataframe Conversion API Misused

def test_ml08_values_attribute():
    result = run_source(PD + "arr = df.values\n")
    assert "ML08" in rule_ids(result)


def test_ml08_to_numpy_clean():
    result = run_source(PD + "arr = df.to_numpy()\n")
    assert "ML08" not in rule_ids(result)


def test_ml08_unrelated_values_attribute_clean():
    result = run_source("pair = config.values\n")
    assert rule_ids(result) == []


# ML09 Matrix Multiplication API Misused

def test_ml09_dot_on_matrices():
    result = run_source(
        "import numpy as np\na = np.zeros((2, 2))\nb = np.ones((2, 2))\n"
        "c = np.dot(a, b)\n"
    )
    assert "ML09" in rule_ids(result)


def test_ml09_vector_dot_clean():
    result = run_source(
        "import numpy as np\nv = np.zeros(3)\nw = np.ones(3)\ns = np.dot(v, w)\n"
    )
    assert "ML09" not in rule_ids(result)


def test_ml09_matmul_clean():
    result = run_source(
        "import numpy as np\na = np.zeros((2, 2))\nb = np.ones((2, 2))\n"
        "c = np.matmul(a, b)\n"
    )
    assert "ML09" not in rule_ids(result)


def test_ml09_unknown_rank_info_tier_in_development():
    result = run_source(
        "import numpy as np\na = np.asarray(data)\nb = np.asarray(other)\n"
        "c = np.dot(a, b)\n"
    )
    diags = [d for d in result.diagnostics if d.rule_id == "ML09"]
    assert len(diags) == 1
    assert "rank" in diags[0].message
