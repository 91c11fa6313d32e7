"""Rules ML10-ML20: feature-engineering and model-training smells."""

from __future__ import annotations

import ast

from ..engine import Finding, rule
from ..semantics import (
    ESTIMATOR,
    MODEL,
    NDARRAY,
    OPTIMIZER,
    SCALER,
    TENSOR,
    SemanticModel,
)
from .common import (
    build_parent_map,
    contains_attr_call,
    contains_name,
    keyword_map,
    positive_number_literal,
    single_assignment_targets,
    walk_tree,
)

SCALING_SENSITIVE = [
    "sklearn.decomposition.PCA",
    "sklearn.svm.SVC",
    "sklearn.svm.SVR",
    "sklearn.svm.LinearSVC",
    "sklearn.linear_model.SGDClassifier",
    "sklearn.linear_model.SGDRegressor",
    "sklearn.neural_network.MLPClassifier",
    "sklearn.neural_network.MLPRegressor",
]

PIPELINE_CTORS = {"sklearn.pipeline.Pipeline", "sklearn.pipeline.make_pipeline"}

LOG_APIS = ["tensorflow.log", "tensorflow.math.log", "torch.log", "numpy.log"]
CLIP_APIS = ["tensorflow.clip_by_value", "torch.clamp", "numpy.clip"]

TILE_APIS = {"tensorflow.tile", "numpy.tile"}

GROW_APIS = {"tensorflow.concat", "tensorflow.stack"}

ARITH_OPS = (ast.Add, ast.Sub, ast.Mult, ast.Div)


def _scaler_ctors(model: SemanticModel) -> set[str]:
    return {
        name for name, tag in model.signatures.constructors.items() if tag == SCALER
    }


@rule("ML10")
def check_no_scaling(model: SemanticModel, params: dict) -> list[Finding]:
    sensitive = set(params.get("sensitive_estimators", SCALING_SENSITIVE))
    scalers = set(params.get("scalers", [])) or _scaler_ctors(model)

    module = model.unit.tree
    assert module is not None
    top_scaler_indices = [
        f.stmt_index for f in model.body_facts(module) if f.callee in scalers
    ]

    def pipeline_mix(ctor_call: ast.Call) -> tuple[bool, bool]:
        has_sensitive = has_scaler = False
        for sub in ast.walk(ctor_call):
            if isinstance(sub, ast.Call) and sub is not ctor_call:
                canon = model.resolve(sub.func)
                if canon in sensitive:
                    has_sensitive = True
                if canon in scalers:
                    has_scaler = True
        return has_sensitive, has_scaler

    pipelines = [f for f in model.call_index if f.callee in PIPELINE_CTORS]

    findings = []
    for body, facts in model.bodies:
        body_scaler_indices = [
            f.stmt_index for f in facts if f.callee in scalers
        ]
        for fact in facts:
            if fact.method not in ("fit", "fit_transform"):
                continue
            prov = fact.receiver_prov
            if prov.tag != ESTIMATOR:
                continue
            # A scaler constructed earlier in this body, or anywhere at
            # module top level, counts as scaling in scope.
            scaled_before = any(
                i <= fact.stmt_index for i in body_scaler_indices
            ) or (body is not module and bool(top_scaler_indices))
            if prov.ctor in sensitive:
                if not scaled_before:
                    short = prov.ctor.rsplit(".", 1)[-1]
                    findings.append(Finding(
                        fact.node,
                        f"{short} is fit without any feature scaling in scope",
                    ))
            elif prov.ctor in PIPELINE_CTORS:
                mixes = [pipeline_mix(p.node) for p in pipelines]
                bad = any(s and not sc for s, sc in mixes)
                clean = any(s and sc for s, sc in mixes)
                if bad and not clean and not scaled_before:
                    findings.append(Finding(
                        fact.node,
                        "pipeline contains a scaling-sensitive estimator but "
                        "no scaler step",
                    ))
    return findings


@rule("ML11")
def check_hyperparameters(model: SemanticModel, params: dict) -> list[Finding]:
    require_optimizer_kw = params.get("optimizer_requires_keyword", True)
    findings = []
    for fact in model.call_index:
        if fact.callee is None:
            continue
        tag = model.signatures.constructors.get(fact.callee)
        short = fact.callee.rsplit(".", 1)[-1]
        if tag == ESTIMATOR and fact.callee not in PIPELINE_CTORS:
            if not fact.node.args and not fact.node.keywords:
                findings.append(Finding(
                    fact.node,
                    f"{short} constructed with all-default hyperparameters",
                ))
        elif tag == OPTIMIZER:
            no_kw = not fact.node.keywords
            if (require_optimizer_kw and no_kw) or (
                not require_optimizer_kw and no_kw and not fact.node.args
            ):
                findings.append(Finding(
                    fact.node,
                    f"{short} constructed without explicit hyperparameters "
                    "(e.g. a learning-rate keyword)",
                ))
    return findings


@rule("ML12")
def check_memory_not_freed(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    # (a) model constructed in a loop without clear_session() in that loop
    for fact in model.call_index:
        if model.prov(fact.node).tag != MODEL or not fact.loops:
            continue
        body_facts = model.body_facts(fact.body)
        innermost = fact.loops[-1]
        cleared = any(
            innermost in f.loops and (
                f.method == "clear_session"
                or (f.callee or "").endswith(".clear_session")
            )
            for f in body_facts
        )
        if not cleared:
            findings.append(Finding(
                fact.node,
                "model constructed inside a loop without clear_session(); "
                "previous graphs are never freed",
            ))
    # (b) loss tensor accumulated into a list without detach()/item()
    for fact in model.call_index:
        if fact.method != "append" or not fact.loops or len(fact.node.args) != 1:
            continue
        arg = fact.node.args[0]
        prov = model.prov(arg)
        if prov.tag == TENSOR and prov.via == "loss" \
                and not contains_attr_call(arg, {"detach", "item"}):
            findings.append(Finding(
                fact.node,
                "loss tensor appended in a loop without .detach()/.item(); "
                "the whole graph is retained",
            ))
    return findings


# ML13 is entirely project-level; see engine._project_rules.


@rule("ML14")
def check_randomness_uncontrolled(model: SemanticModel, params: dict) -> list[Finding]:
    """Per-file arm: sklearn callables that accept random_state but omit it.

    The per-library global-seed arm is project-level and runs in phase 2.
    """
    findings = []
    for fact in model.call_index:
        if fact.callee not in model.signatures.random_state_callables:
            continue
        if "random_state" in keyword_map(fact.node):
            continue
        short = fact.callee.rsplit(".", 1)[-1]
        findings.append(Finding(
            fact.node, f"{short} call omits random_state; results will vary "
                       "between runs",
        ))
    return findings


@rule("ML15")
def check_missing_mask(model: SemanticModel, params: dict) -> list[Finding]:
    log_apis = set(params.get("log_apis", LOG_APIS))
    clip_apis = set(params.get("clip_apis", CLIP_APIS))
    findings = []
    for fact in model.call_index:
        if fact.callee not in log_apis or not fact.node.args:
            continue
        arg = fact.node.args[0]
        if isinstance(arg, ast.Call) and model.resolve(arg.func) in clip_apis:
            continue
        if positive_number_literal(arg):
            continue
        short = fact.callee.rsplit(".", 1)[-1]
        findings.append(Finding(
            fact.node,
            f"{short}() argument is not masked; clip it so it cannot reach "
            "zero",
        ))
    return findings


@rule("ML16")
def check_broadcasting_unused(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for body, facts in model.bodies:
        once = single_assignment_targets(body)
        tile_vars = {
            name: value for name, value in once.items()
            if isinstance(value, ast.Call) and _is_tile(model, value)
        }
        for node in ast.walk(body):
            if not isinstance(node, ast.BinOp) or not isinstance(node.op, ARITH_OPS):
                continue
            for operand, other in ((node.left, node.right), (node.right, node.left)):
                tile_call = None
                if isinstance(operand, ast.Call) and _is_tile(model, operand):
                    tile_call = operand
                elif isinstance(operand, ast.Name) and operand.id in tile_vars:
                    tile_call = tile_vars[operand.id]
                if tile_call is None:
                    continue
                if model.prov(other).tag in (TENSOR, NDARRAY):
                    findings.append(Finding(
                        tile_call,
                        "tiled tensor used in an elementwise operation; "
                        "broadcasting avoids the intermediate copy",
                    ))
    # Deduplicate by tile call node, keep source order.
    seen: set[int] = set()
    unique = []
    for f in findings:
        if id(f.node) not in seen:
            seen.add(id(f.node))
            unique.append(f)
    return unique


def _is_tile(model: SemanticModel, call: ast.Call) -> bool:
    fact = model.call_fact(call)
    if fact is None:
        return False
    if fact.callee in TILE_APIS:
        return True
    return fact.method == "repeat" and fact.receiver_prov.tag == TENSOR


@rule("ML17")
def check_tensorarray(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for body, _ in model.bodies:
        constants: set[str] = set()
        for stmt in _statements_of(body):
            _scan_ml17(model, stmt, constants, in_loop=False, findings=findings)
    return findings


def _statements_of(body: ast.AST) -> list[ast.stmt]:
    return list(getattr(body, "body", []))


def _scan_ml17(model: SemanticModel, stmt: ast.stmt, constants: set[str],
               in_loop: bool, findings: list[Finding]) -> None:
    if isinstance(stmt, ast.Assign) and len(stmt.targets) == 1 \
            and isinstance(stmt.targets[0], ast.Name):
        name = stmt.targets[0].id
        value = stmt.value
        if isinstance(value, ast.Call):
            canon = model.resolve(value.func)
            if not in_loop and canon == "tensorflow.constant":
                constants.add(name)
                return
            if in_loop and canon in GROW_APIS and name in constants \
                    and contains_name(value, name):
                findings.append(Finding(
                    value,
                    f"tensor '{name}' initialized with tf.constant() grows "
                    "inside a loop; use tf.TensorArray()",
                ))
                return
        if not in_loop:
            constants.discard(name)
        return
    if isinstance(stmt, (ast.For, ast.AsyncFor, ast.While)):
        for inner in stmt.body + stmt.orelse:
            _scan_ml17(model, inner, constants, in_loop=True, findings=findings)
        return
    if isinstance(stmt, (ast.If, ast.With, ast.AsyncWith, ast.Try)):
        for inner in ast.iter_child_nodes(stmt):
            if isinstance(inner, ast.stmt):
                _scan_ml17(model, inner, constants, in_loop, findings)
            elif isinstance(inner, ast.excepthandler):
                for s in inner.body:
                    _scan_ml17(model, s, constants, in_loop, findings)


@rule("ML18")
def check_mode_toggling(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    for body, facts in model.bodies:
        pending: dict[str, ast.Call] = {}
        for fact in facts:
            if fact.receiver_name is not None:
                if fact.method == "eval" and fact.receiver_prov.tag == MODEL:
                    pending[fact.receiver_name] = fact.node
                    continue
                if fact.method == "train" and fact.receiver_name in pending:
                    del pending[fact.receiver_name]
                    continue
            is_training_step = fact.method == "backward" or (
                fact.method == "step" and fact.receiver_prov.tag == OPTIMIZER
            )
            if is_training_step and pending:
                for name, node in pending.items():
                    findings.append(Finding(
                        node,
                        f"'{name}' is still in eval() mode when training "
                        "resumes; call .train() first",
                    ))
                pending.clear()
    return findings


@rule("ML19")
def check_forward_misused(model: SemanticModel, params: dict) -> list[Finding]:
    if not model.imports_library("torch"):
        return []
    assert model.unit.tree is not None
    parents = build_parent_map(model.unit.tree)
    model_bases = model.signatures.model_bases
    findings = []
    for node in walk_tree(model):
        if not (isinstance(node, ast.Call) and isinstance(node.func, ast.Attribute)
                and node.func.attr == "forward"):
            continue
        receiver = node.func.value
        if isinstance(receiver, ast.Call) and isinstance(receiver.func, ast.Name) \
                and receiver.func.id == "super" \
                and _inside_forward_of_module(model, parents, node, model_bases):
            continue
        findings.append(Finding(
            node, "explicit .forward() call skips registered hooks; call the "
                  "module directly",
        ))
    return findings


def _inside_forward_of_module(model: SemanticModel, parents: dict[int, ast.AST],
                              node: ast.AST, model_bases: set[str]) -> bool:
    current = node
    func = None
    while True:
        parent = parents.get(id(current))
        if parent is None:
            return False
        if isinstance(parent, (ast.FunctionDef, ast.AsyncFunctionDef)) and func is None:
            if parent.name != "forward":
                return False
            func = parent
        elif isinstance(parent, ast.ClassDef) and func is not None:
            if parent.name in model.model_classes:
                return True
            for base in parent.bases:
                resolved = model.resolve(base)
                if resolved is None:
                    continue
                # Subclassing any torch.nn class makes this a module.
                if resolved in model_bases or resolved.startswith("torch.nn."):
                    return True
            return False
        current = parent


@rule("ML20")
def check_gradients_not_cleared(model: SemanticModel, params: dict) -> list[Finding]:
    findings = []
    flagged: set[int] = set()
    for body, facts in model.bodies:
        loop_ids = {lid for f in facts for lid in f.loops}
        for loop_id in loop_ids:
            in_loop = [f for f in facts if loop_id in f.loops]
            backwards = [f for f in in_loop if f.method == "backward"]
            steps = [
                f for f in in_loop
                if f.method == "step" and f.receiver_prov.tag == OPTIMIZER
            ]
            if not backwards or not steps:
                continue
            first_backward = min(backwards, key=lambda f: f.stmt_index)
            cleared = any(
                f.method == "zero_grad" and f.stmt_index < first_backward.stmt_index
                for f in in_loop
            )
            if not cleared and id(first_backward.node) not in flagged:
                flagged.add(id(first_backward.node))
                findings.append(Finding(
                    first_backward.node,
                    "backward() runs in a loop without a preceding "
                    "zero_grad(); gradients accumulate across iterations",
                ))
    return findings
