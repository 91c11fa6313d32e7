"""Small AST helpers shared by the rule modules."""

from __future__ import annotations

import ast
from typing import Iterator, Optional

from ..semantics import SemanticModel


def walk_tree(model: SemanticModel) -> Iterator[ast.AST]:
    assert model.unit.tree is not None
    return ast.walk(model.unit.tree)


def keyword_map(call: ast.Call) -> dict[str, ast.expr]:
    return {kw.arg: kw.value for kw in call.keywords if kw.arg is not None}


def build_parent_map(tree: ast.AST) -> dict[int, ast.AST]:
    parents: dict[int, ast.AST] = {}
    for node in ast.walk(tree):
        for child in ast.iter_child_nodes(node):
            parents[id(child)] = node
    return parents


def contains_name(node: ast.AST, name: str) -> bool:
    return any(
        isinstance(n, ast.Name) and n.id == name for n in ast.walk(node)
    )


def contains_attr_call(node: ast.AST, attrs: set[str]) -> bool:
    return any(
        isinstance(n, ast.Call)
        and isinstance(n.func, ast.Attribute)
        and n.func.attr in attrs
        for n in ast.walk(node)
    )


def is_literal(node: ast.AST, *values) -> bool:
    if not isinstance(node, ast.Constant) or isinstance(node.value, bool):
        return False
    return any(node.value == v and type(node.value) is type(v) for v in values)


def positive_number_literal(node: ast.AST) -> bool:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) \
            and not isinstance(node.value, bool):
        return node.value > 0
    return False


def nan_expr(model: SemanticModel, node: ast.AST) -> bool:
    """True for np.nan (under any alias) and float('nan') literals."""
    canon = model.resolve(node)
    if canon in ("numpy.nan", "numpy.NaN", "numpy.NAN", "math.nan"):
        return True
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) \
            and node.func.id == "float" and len(node.args) == 1:
        arg = node.args[0]
        if isinstance(arg, ast.Constant) and isinstance(arg.value, str) \
                and arg.value.strip().lower() in ("nan", "+nan", "-nan"):
            return True
    return False


def single_assignment_targets(body: ast.AST) -> dict[str, ast.expr]:
    """Names assigned exactly once in ``body`` -> their assigned value."""
    counts: dict[str, int] = {}
    values: dict[str, ast.expr] = {}
    for node in ast.walk(body):
        if isinstance(node, ast.Assign) and len(node.targets) == 1 \
                and isinstance(node.targets[0], ast.Name):
            name = node.targets[0].id
            counts[name] = counts.get(name, 0) + 1
            values[name] = node.value
        elif isinstance(node, (ast.AugAssign, ast.AnnAssign)) \
                and isinstance(node.target, ast.Name):
            counts[node.target.id] = counts.get(node.target.id, 0) + 2
    return {n: v for n, v in values.items() if counts.get(n) == 1}


def enclosing_loops(tree: ast.AST) -> dict[int, list[ast.AST]]:
    """Map of node id -> stack of enclosing loop statements (outermost first)."""
    out: dict[int, list[ast.AST]] = {}

    def visit(node: ast.AST, stack: list[ast.AST]) -> None:
        out[id(node)] = list(stack)
        is_loop = isinstance(node, (ast.For, ast.AsyncFor, ast.While))
        for child in ast.iter_child_nodes(node):
            if is_loop and child in getattr(node, "body", []):
                visit(child, stack + [node])
            else:
                visit(child, stack)

    visit(tree, [])
    return out


def call_basename(call: ast.Call) -> Optional[str]:
    if isinstance(call.func, ast.Attribute):
        return call.func.attr
    if isinstance(call.func, ast.Name):
        return call.func.id
    return None
