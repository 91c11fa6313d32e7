"""Rules ML21-ML22: model-evaluation smells."""

from __future__ import annotations

import ast

from ..engine import Finding, rule
from ..semantics import ESTIMATOR, SCALER, SemanticModel
from .common import walk_tree
from .training import PIPELINE_CTORS

SPLIT_API = "sklearn.model_selection.train_test_split"
CROSS_VAL_APIS = {
    "sklearn.model_selection.cross_val_score",
    "sklearn.model_selection.cross_validate",
}

DEPENDENT_METRICS = [
    "sklearn.metrics.f1_score",
    "sklearn.metrics.precision_score",
    "sklearn.metrics.recall_score",
    "sklearn.metrics.accuracy_score",
]
INDEPENDENT_METRICS = [
    "sklearn.metrics.roc_auc_score",
    "sklearn.metrics.average_precision_score",
]

_LEAKY_METHODS = ("fit", "fit_transform")


@rule("ML21")
def check_data_leakage(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for body, facts in model.bodies:
        # Variables holding full-dataset transform results, and the raw data
        # variables those transforms were fit on, in statement order.
        leaky_vars: dict[str, int] = {}
        fitted_sources: dict[str, int] = {}
        for node in ast.walk(body):
            if isinstance(node, ast.Assign) and len(node.targets) == 1 \
                    and isinstance(node.targets[0], ast.Name) \
                    and isinstance(node.value, ast.Call):
                fact = model.call_fact(node.value)
                if fact is not None and fact.receiver_prov.tag == SCALER \
                        and fact.method in _LEAKY_METHODS:
                    leaky_vars[node.targets[0].id] = fact.stmt_index
                    for arg in node.value.args:
                        if isinstance(arg, ast.Name):
                            fitted_sources[arg.id] = fact.stmt_index

        for fact in facts:
            if fact.callee == SPLIT_API:
                for arg in fact.node.args:
                    if _is_leaky_data(model, fact.stmt_index, arg, leaky_vars):
                        findings.append(Finding(
                            fact.node,
                            "train_test_split receives data transformed by a "
                            "scaler fit on the full dataset; split first or "
                            "use a Pipeline",
                        ))
                        break
            elif fact.callee in CROSS_VAL_APIS and len(fact.node.args) >= 2:
                estimator = model.prov(fact.node.args[0])
                if estimator.tag != ESTIMATOR or estimator.ctor in PIPELINE_CTORS:
                    continue
                data = fact.node.args[1]
                leaked = _is_leaky_data(model, fact.stmt_index, data, leaky_vars)
                if not leaked and isinstance(data, ast.Name):
                    leaked = fitted_sources.get(data.id, fact.stmt_index + 1) \
                        < fact.stmt_index
                if leaked:
                    findings.append(Finding(
                        fact.node,
                        "cross-validation of a bare estimator on data already "
                        "transformed by a scaler; wrap both in a Pipeline",
                    ))
    return findings


def _is_leaky_data(model: SemanticModel, at_index: int, arg: ast.expr,
                   leaky_vars: dict[str, int]) -> bool:
    if isinstance(arg, ast.Name):
        return leaky_vars.get(arg.id, at_index + 1) < at_index
    if isinstance(arg, ast.Call):
        fact = model.call_fact(arg)
        return fact is not None and fact.receiver_prov.tag == SCALER \
            and fact.method in _LEAKY_METHODS
    return False


@rule("ML22")
def check_threshold_dependent(model: SemanticModel, params: dict) -> list[Finding]:
    dependent = set(params.get("dependent_metrics", DEPENDENT_METRICS))
    independent = set(params.get("independent_metrics", INDEPENDENT_METRICS))
    if any(f.callee in independent for f in model.call_index):
        return []
    findings = []
    for fact in model.call_index:
        if fact.callee in dependent:
            short = fact.callee.rsplit(".", 1)[-1]
            findings.append(Finding(
                fact.node,
                f"only threshold-dependent metrics used ({short}); add a "
                "threshold-independent metric such as roc_auc_score",
            ))
    return findings
