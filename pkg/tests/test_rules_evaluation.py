"""Rules ML21-ML22: model evaluation smells."""

from conftest import rule_ids, run_source

SCALE_FIRST = (
    "from sklearn.preprocessing import StandardScaler\n"
    "scaler = StandardScaler()\n"
    "X_scaled = scaler.fit_transform(X)\n"
)


# ML21 Data Leakage

def test_ml21_scale_before_split():
    result = run_source(
        "from sklearn.model_selection import train_test_split\n"
        + SCALE_FIRST
        + "parts = train_test_split(X_scaled, y, random_state=0)\n"
    )
    assert "ML21" in rule_ids(result)


def test_ml21_direct_scaler_call_in_split():
    result = run_source(
        "from sklearn.model_selection import train_test_split\n"
        "from sklearn.preprocessing import StandardScaler\n"
        "parts = train_test_split(StandardScaler().fit_transform(X), y, random_state=0)\n"
    )
    assert "ML21" in rule_ids(result)


def test_ml21_split_then_scale_clean():
    result = run_source(
        "from sklearn.model_selection import train_test_split\n"
        "from sklearn.preprocessing import StandardScaler\n"
        "X_train, X_test, y_train, y_test = train_test_split(X, y, random_state=0)\n"
        "scaler = StandardScaler()\n"
        "X_train = scaler.fit_transform(X_train)\n"
        "X_test = scaler.transform(X_test)\n"
    )
    assert "ML21" not in rule_ids(result)


def test_ml21_cross_val_with_bare_estimator_on_leaky_data():
    result = run_source(
        "from sklearn.model_selection import cross_val_score\n"
        "from sklearn.svm import SVC\n"
        + SCALE_FIRST
        + "clf = SVC(C=1.0)\n"
        "scores = cross_val_score(clf, X_scaled, y)\n"
    )
    assert "ML21" in rule_ids(result)


def test_ml21_cross_val_with_pipeline_clean():
    result = run_source(
        "from sklearn.model_selection import cross_val_score\n"
        "from sklearn.pipeline import Pipeline\n"
        "from sklearn.preprocessing import StandardScaler\n"
        "from sklearn.svm import SVC\n"
        "pipe = Pipeline([('s', StandardScaler()), ('c', SVC(C=1.0))])\n"
        "scores = cross_val_score(pipe, X, y)\n"
    )
    assert "ML21" not in rule_ids(result)


def test_ml21_cross_val_on_raw_data_clean():
    result = run_source(
        "from sklearn.model_selection import cross_val_score\n"
        "from sklearn.svm import SVC\n"
        "clf = SVC(C=1.0)\n"
        "scores = cross_val_score(clf, X, y)\n"
    )
    assert "ML21" not in rule_ids(result)


# ML22 Threshold-Dependent Validation

def test_ml22_f1_without_independent_metric():
    result = run_source(
        "from sklearn.metrics import f1_score\ns = f1_score(yt, yp)\n"
    )
    assert "ML22" in rule_ids(result)


def test_ml22_each_dependent_call_flagged():
    result = run_source(
        "from sklearn.metrics import accuracy_score, precision_score\n"
        "a = accuracy_score(yt, yp)\np = precision_score(yt, yp)\n"
    )
    assert rule_ids(result).count("ML22") == 2


def test_ml22_auc_alongside_clean():
    result = run_source(
        "from sklearn.metrics import f1_score, roc_auc_score\n"
        "s = f1_score(yt, yp)\nauc = roc_auc_score(yt, prob)\n"
    )
    assert "ML22" not in rule_ids(result)


def test_ml22_average_precision_counts_as_independent():
    result = run_source(
        "from sklearn.metrics import average_precision_score, recall_score\n"
        "r = recall_score(yt, yp)\nap = average_precision_score(yt, prob)\n"
    )
    assert "ML22" not in rule_ids(result)


def test_ml22_severity_is_info():
    result = run_source(
        "from sklearn.metrics import f1_score\ns = f1_score(yt, yp)\n"
    )
    diag = next(d for d in result.diagnostics if d.rule_id == "ML22")
    assert diag.severity == "info"
