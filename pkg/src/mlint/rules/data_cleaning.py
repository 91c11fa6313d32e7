"""Rules ML01-ML09: data-cleaning stage smells (dataframe and array misuse)."""

from __future__ import annotations

import ast

from ..engine import Finding, rule
from ..semantics import DATAFRAME, NDARRAY, SERIES, TENSOR, SemanticModel
from .common import is_literal, keyword_map, nan_expr, walk_tree

ITERATION_METHODS = {"iterrows", "itertuples", "items", "iteritems"}

READER_APIS = [
    "pandas.read_csv",
    "pandas.read_table",
    "pandas.read_excel",
    "pandas.read_json",
]

PURE_DF_METHODS = ["dropna", "fillna", "sort_values", "drop", "reset_index", "replace"]
PURE_FUNCTIONS = ["numpy.clip"]


@rule("ML01")
def check_unnecessary_iteration(model: SemanticModel, params: dict) -> list[Finding]:
    findings: list[Finding] = []
    for node in walk_tree(model):
        if not isinstance(node, (ast.For, ast.AsyncFor)):
            continue
        # (a) row-wise iteration over a dataframe
        if isinstance(node.iter, ast.Call):
            fact = model.call_fact(node.iter)
            if fact is not None and fact.method in ITERATION_METHODS \
                    and fact.receiver_prov.tag == DATAFRAME:
                findings.append(Finding(
                    node.iter,
                    f"loop iterates dataframe rows via .{fact.method}(); use a "
                    "vectorized Pandas operation instead",
                ))
                continue
        # (b) slicing a tensor in a loop while accumulating into a scalar/list
        if _tensor_slice_accumulation(model, node):
            findings.append(Finding(
                node,
                "loop slices a tensor and accumulates the pieces; use a "
                "vectorized reduction instead",
            ))
    return findings


def _tensor_slice_accumulation(model: SemanticModel, loop: ast.stmt) -> bool:
    for stmt in ast.walk(loop):
        if isinstance(stmt, ast.AugAssign):
            holders = [stmt.value]
        elif isinstance(stmt, ast.Expr) and isinstance(stmt.value, ast.Call) \
                and isinstance(stmt.value.func, ast.Attribute) \
                and stmt.value.func.attr == "append":
            holders = list(stmt.value.args)
        else:
            continue
        for holder in holders:
            for sub in ast.walk(holder):
                if isinstance(sub, ast.Subscript) \
                        and model.prov(sub.value).tag == TENSOR:
                    return True
    return False


@rule("ML02")
def check_nan_comparison(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for node in walk_tree(model):
        if not isinstance(node, ast.Compare):
            continue
        if not any(isinstance(op, (ast.Eq, ast.NotEq)) for op in node.ops):
            continue
        operands = [node.left, *node.comparators]
        if any(nan_expr(model, operand) for operand in operands):
            findings.append(Finding(
                node,
                "comparison with NaN is always False; use isna()/notna() "
                "instead",
            ))
    return findings


@rule("ML03")
def check_chain_indexing(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for node in walk_tree(model):
        if not isinstance(node, ast.Subscript):
            continue
        inner = node.value
        if not isinstance(inner, ast.Subscript):
            continue
        if model.prov(inner.value).tag != DATAFRAME:
            continue
        message = "chained indexing on a dataframe; use a single .loc[...] call"
        if isinstance(node.ctx, ast.Store):
            message += " (assignment to a chained index may silently fail)"
        findings.append(Finding(node, message))
    return findings


@rule("ML04")
def check_columns_dtype_not_set(model: SemanticModel, params: dict) -> list[Finding]:
    readers = set(params.get("readers", READER_APIS))
    findings = []
    for fact in model.call_index:
        if fact.callee not in readers:
            continue
        kwargs = keyword_map(fact.node)
        missing = []
        if "usecols" not in kwargs:
            missing.append("explicit column selection (usecols)")
        if "dtype" not in kwargs:
            missing.append("explicit dtype")
        if missing:
            short = fact.callee.rsplit(".", 1)[-1]
            findings.append(Finding(
                fact.node, f"{short} call is missing {' and '.join(missing)}",
            ))
    return findings


@rule("ML05")
def check_empty_column_misinit(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for node in walk_tree(model):
        if not isinstance(node, ast.Assign):
            continue
        if len(node.targets) != 1 or not isinstance(node.targets[0], ast.Subscript):
            continue
        target = node.targets[0]
        if model.prov(target.value).tag != DATAFRAME:
            continue
        key = target.slice
        if not (isinstance(key, ast.Constant) and isinstance(key.value, str)):
            continue
        if is_literal(node.value, 0, 0.0, ""):
            findings.append(Finding(
                node,
                f"new column '{key.value}' initialized with a filler value; "
                "use np.nan for an empty column",
            ))
    return findings


@rule("ML06")
def check_merge_params(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for fact in model.call_index:
        is_method = fact.method == "merge" and fact.receiver_prov.tag == DATAFRAME
        if not is_method and fact.callee != "pandas.merge":
            continue
        kwargs = keyword_map(fact.node)
        missing = []
        if "on" not in kwargs and not ("left_on" in kwargs and "right_on" in kwargs):
            missing.append("on (or left_on/right_on)")
        if "how" not in kwargs:
            missing.append("how")
        if "validate" not in kwargs:
            missing.append("validate")
        if missing:
            findings.append(Finding(
                fact.node,
                f"merge call does not specify {', '.join(missing)}",
            ))
    return findings


@rule("ML07")
def check_inplace_misused(model: SemanticModel, params: dict) -> list[Finding]:
    pure_methods = set(params.get("methods", PURE_DF_METHODS))
    pure_functions = set(params.get("functions", PURE_FUNCTIONS))
    findings = []
    for node in walk_tree(model):
        if not isinstance(node, ast.Expr) or not isinstance(node.value, ast.Call):
            continue
        fact = model.call_fact(node.value)
        if fact is None:
            continue
        matched = (
            fact.method in pure_methods
            and fact.receiver_prov.tag in (DATAFRAME, SERIES)
        ) or fact.callee in pure_functions
        if not matched:
            continue
        inplace = keyword_map(fact.node).get("inplace")
        if inplace is not None and not (
            isinstance(inplace, ast.Constant) and inplace.value is False
        ):
            continue  # literal True, or a runtime value assumed to be set
        api = fact.method or fact.callee
        findings.append(Finding(
            fact.node,
            f"result of {api}() is discarded; assign it or pass inplace=True",
        ))
    return findings


@rule("ML08")
def check_df_conversion(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for node in walk_tree(model):
        if isinstance(node, ast.Attribute) and node.attr == "values" \
                and model.prov(node.value).tag == DATAFRAME:
            findings.append(Finding(
                node, "dataframe .values has inconsistent return types; use "
                      ".to_numpy() instead",
            ))
    return findings


@rule("ML09")
def check_matmul_misused(model: SemanticModel, params: dict) -> list[Finding]:
    unknown_rank_info = params.get(
        "unknown_rank_info", params.get("mode") == "development"
    )
    findings = []
    for fact in model.call_index:
        if fact.callee != "numpy.dot" or len(fact.node.args) < 2:
            continue
        a = model.prov(fact.node.args[0])
        b = model.prov(fact.node.args[1])
        if a.tag != NDARRAY or b.tag != NDARRAY:
            continue
        ranks = (a.rank, b.rank)
        if ranks == (2, 2):
            findings.append(Finding(
                fact.node,
                "np.dot() on two-dimensional matrices; np.matmul() has the "
                "clearer semantics",
            ))
        elif unknown_rank_info and all(r in (None, 2) for r in ranks):
            findings.append(Finding(
                fact.node,
                "np.dot() on arrays of unverified rank; prefer np.matmul() "
                "for matrix multiplication",
            ))
    return findings
