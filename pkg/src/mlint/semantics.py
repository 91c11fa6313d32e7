"""Lightweight intraprocedural semantics: import aliases, library-object
provenance for expressions and variables, and statement-order call facts.

Inference is deliberately conservative: anything the analyzer cannot prove
from a constructor call or a signature-table entry is Unknown, and joining
two different categories yields Unknown.  Rules treat Unknown as "no match".
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

import tomli

from .frontend import SourceUnit, Span, node_span

# Provenance categories.
UNKNOWN = "Unknown"
DATAFRAME = "DataFrame"
SERIES = "Series"
NDARRAY = "NdArray"
TENSOR = "Tensor"
ESTIMATOR = "Estimator"
SCALER = "Scaler"
MODEL = "Model"
OPTIMIZER = "Optimizer"
DATALOADER = "DataLoader"
METRICFN = "MetricFn"


@dataclass(frozen=True)
class Provenance:
    """Inferred library-object category of an expression.

    ``ctor`` is the canonical constructor that originally produced the value
    (propagated through method calls); ``via`` records the last producing
    method, e.g. "Scaler.fit_transform".
    """

    tag: str = UNKNOWN
    rank: Optional[int] = None
    ctor: Optional[str] = None
    via: Optional[str] = None

    @property
    def known(self) -> bool:
        return self.tag != UNKNOWN


UNKNOWN_PROV = Provenance()


class SignatureTable:
    """Canonical API names -> provenance effects, loaded from a TOML file."""

    def __init__(self, data: dict) -> None:
        self.version = data.get("version", 0)
        self.constructors: dict[str, str] = dict(data.get("constructors", {}))
        self.methods: dict[str, dict[str, str]] = {
            tag: dict(m) for tag, m in data.get("methods", {}).items()
        }
        self.attributes: dict[str, dict[str, str]] = {
            tag: dict(m) for tag, m in data.get("attributes", {}).items()
        }
        self.subscripts: dict[str, str] = dict(data.get("subscripts", {}))
        rank = data.get("rank", {})
        self.rank_shape_ctors = set(rank.get("shape_constructors", []))
        self.rank_nested_ctors = set(rank.get("nested_list_constructors", []))
        self.model_bases = set(data.get("model_bases", {}).get("names", []))
        self.loss_basenames = set(data.get("loss_calls", {}).get("basenames", []))
        self.random: dict[str, dict[str, set[str]]] = {}
        for family, spec in data.get("random", {}).items():
            self.random[family] = {
                "apis": set(spec.get("apis", [])),
                "seeds": set(spec.get("seeds", [])),
            }
        self.random_state_callables = set(
            data.get("random_state", {}).get("callables", [])
        )

    @classmethod
    def load(cls, path: Optional[str] = None) -> "SignatureTable":
        if path is None:
            raw = resources.files("mlint.data").joinpath("signatures.toml").read_bytes()
        else:
            with open(path, "rb") as fh:
                raw = fh.read()
        return cls(tomli.loads(raw.decode("utf-8")))


@dataclass
class AliasTable:
    """Local import names -> canonical module / symbol paths."""

    module_aliases: dict[str, str] = field(default_factory=dict)
    symbol_aliases: dict[str, str] = field(default_factory=dict)

    def resolve_parts(self, parts: list[str]) -> Optional[str]:
        if not parts:
            return None
        head, rest = parts[0], parts[1:]
        if head in self.module_aliases:
            return ".".join([self.module_aliases[head], *rest])
        if head in self.symbol_aliases:
            return ".".join([self.symbol_aliases[head], *rest])
        return None

    def resolve_expr(self, node: ast.AST) -> Optional[str]:
        parts = _dotted_parts(node)
        if parts is None:
            return None
        return self.resolve_parts(parts)


def _dotted_parts(node: ast.AST) -> Optional[list[str]]:
    parts: list[str] = []
    while isinstance(node, ast.Attribute):
        parts.append(node.attr)
        node = node.value
    if isinstance(node, ast.Name):
        parts.append(node.id)
        return list(reversed(parts))
    return None


def resolve_aliases(unit: SourceUnit) -> AliasTable:
    """Fold every import statement, at any nesting level, into one table.

    Later imports shadow earlier ones; star imports contribute nothing.
    """
    table = AliasTable()
    assert unit.tree is not None
    for node in _walk_in_order(unit.tree):
        if isinstance(node, ast.Import):
            for alias in node.names:
                if alias.asname:
                    table.module_aliases[alias.asname] = alias.name
                else:
                    top = alias.name.split(".")[0]
                    table.module_aliases[top] = top
        elif isinstance(node, ast.ImportFrom):
            if node.module is None or node.level:
                continue  # relative import, not a library
            for alias in node.names:
                if alias.name == "*":
                    continue
                local = alias.asname or alias.name
                table.symbol_aliases[local] = f"{node.module}.{alias.name}"
    return table


def _walk_in_order(tree: ast.AST):
    """Depth-first walk in lexical order (ast.walk is breadth-first)."""
    yield tree
    for child in ast.iter_child_nodes(tree):
        yield from _walk_in_order(child)


@dataclass
class CallFact:
    """One call site with its resolved callee and receiver information."""

    node: ast.Call
    callee: Optional[str]
    method: Optional[str]
    receiver: Optional[ast.expr]
    receiver_name: Optional[str]
    receiver_prov: Provenance
    stmt_index: int
    loop_depth: int
    loops: tuple[int, ...]  # ids of enclosing loop statements, outermost first
    body: ast.AST
    span: Span


@dataclass
class DefFact:
    node: ast.AST
    name: str
    kind: str  # "function" | "class"
    bases: tuple[str, ...]
    span: Span


class SemanticModel:
    """Per-file semantic facts consumed by the rules."""

    def __init__(self, unit: SourceUnit, aliases: AliasTable, signatures: SignatureTable):
        self.unit = unit
        self.aliases = aliases
        self.signatures = signatures
        self.expr_prov: dict[int, Provenance] = {}
        self.call_index: list[CallFact] = []
        self.def_index: list[DefFact] = []
        self.bodies: list[tuple[ast.AST, list[CallFact]]] = []
        self.model_classes: set[str] = set()
        self._body_facts: dict[int, list[CallFact]] = {}
        self._call_by_node: dict[int, CallFact] = {}

    def prov(self, node: ast.AST) -> Provenance:
        return self.expr_prov.get(id(node), UNKNOWN_PROV)

    def resolve(self, node: ast.AST) -> Optional[str]:
        return self.aliases.resolve_expr(node)

    def body_facts(self, body: ast.AST) -> list[CallFact]:
        return self._body_facts.get(id(body), [])

    def call_fact(self, node: ast.AST) -> Optional[CallFact]:
        return self._call_by_node.get(id(node))

    def imports_library(self, library: str) -> bool:
        prefix = library + "."
        targets = list(self.aliases.module_aliases.values())
        targets += list(self.aliases.symbol_aliases.values())
        return any(t == library or t.startswith(prefix) for t in targets)

    def span(self, node: ast.AST) -> Span:
        return node_span(self.unit, node)


def build_model(unit: SourceUnit, signatures: SignatureTable) -> SemanticModel:
    """Run alias resolution and provenance inference over one parsed unit."""
    aliases = resolve_aliases(unit)
    model = SemanticModel(unit, aliases, signatures)
    assert unit.tree is not None
    # Pre-pass: user classes extending a known module base produce Models.
    for node in ast.walk(unit.tree):
        if isinstance(node, ast.ClassDef):
            for base in node.bases:
                canon = aliases.resolve_expr(base)
                if canon in signatures.model_bases:
                    model.model_classes.add(node.name)
    _Builder(model).run()
    return model


class _Builder:
    def __init__(self, model: SemanticModel) -> None:
        self.model = model
        self.sig = model.signatures
        self.stmt_index = 0
        self.loop_stack: list[ast.AST] = []
        self.body_stack: list[ast.AST] = []

    def run(self) -> None:
        tree = self.model.unit.tree
        assert tree is not None
        self._enter_body(tree)
        env: dict[str, Provenance] = {}
        for stmt in tree.body:
            self.visit_stmt(stmt, env)

    def _enter_body(self, node: ast.AST) -> None:
        self.body_stack.append(node)
        facts: list[CallFact] = []
        self.model.bodies.append((node, facts))
        self.model._body_facts[id(node)] = facts

    # -- statements --------------------------------------------------------

    def visit_stmt(self, stmt: ast.stmt, env: dict[str, Provenance]) -> None:
        self.stmt_index += 1
        method = getattr(self, f"stmt_{type(stmt).__name__}", None)
        if method is not None:
            method(stmt, env)
        else:
            self._generic_stmt(stmt, env)

    def _generic_stmt(self, stmt: ast.stmt, env: dict[str, Provenance]) -> None:
        for child in ast.iter_child_nodes(stmt):
            if isinstance(child, ast.expr):
                self.eval(child, env)
            elif isinstance(child, ast.stmt):
                self.visit_stmt(child, env)

    def _visit_block(self, stmts: list[ast.stmt], env: dict[str, Provenance]) -> None:
        for s in stmts:
            self.visit_stmt(s, env)

    def stmt_Assign(self, stmt: ast.Assign, env: dict[str, Provenance]) -> None:
        value = self.eval(stmt.value, env)
        for target in stmt.targets:
            self._assign_target(target, value, env)

    def stmt_AnnAssign(self, stmt: ast.AnnAssign, env: dict[str, Provenance]) -> None:
        value = self.eval(stmt.value, env) if stmt.value is not None else UNKNOWN_PROV
        self._assign_target(stmt.target, value, env)

    def stmt_AugAssign(self, stmt: ast.AugAssign, env: dict[str, Provenance]) -> None:
        value = self.eval(stmt.value, env)
        if isinstance(stmt.target, ast.Name):
            old = env.get(stmt.target.id, UNKNOWN_PROV)
            env[stmt.target.id] = _join(old, value)
        else:
            self.eval(stmt.target, env)

    def _assign_target(self, target: ast.expr, value: Provenance,
                       env: dict[str, Provenance]) -> None:
        if isinstance(target, ast.Name):
            env[target.id] = value
            self.model.expr_prov[id(target)] = value
        elif isinstance(target, (ast.Tuple, ast.List)):
            for elt in target.elts:
                self._assign_target(elt, UNKNOWN_PROV, env)
        elif isinstance(target, (ast.Subscript, ast.Attribute)):
            # Evaluate the target chain so rules can query its provenance.
            self.eval(target, env)
        elif isinstance(target, ast.Starred):
            self._assign_target(target.value, UNKNOWN_PROV, env)

    def stmt_Expr(self, stmt: ast.Expr, env: dict[str, Provenance]) -> None:
        self.eval(stmt.value, env)

    def stmt_If(self, stmt: ast.If, env: dict[str, Provenance]) -> None:
        self.eval(stmt.test, env)
        then_env = dict(env)
        self._visit_block(stmt.body, then_env)
        else_env = dict(env)
        self._visit_block(stmt.orelse, else_env)
        env.clear()
        env.update(_join_envs(then_env, else_env))

    def stmt_For(self, stmt: ast.For, env: dict[str, Provenance]) -> None:
        self.eval(stmt.iter, env)
        self._assign_target(stmt.target, UNKNOWN_PROV, env)
        pre = dict(env)
        body_env = dict(env)
        self.loop_stack.append(stmt)
        self._visit_block(stmt.body, body_env)
        self.loop_stack.pop()
        env.clear()
        env.update(_join_envs(pre, body_env))
        self._visit_block(stmt.orelse, env)

    stmt_AsyncFor = stmt_For

    def stmt_While(self, stmt: ast.While, env: dict[str, Provenance]) -> None:
        self.eval(stmt.test, env)
        pre = dict(env)
        body_env = dict(env)
        self.loop_stack.append(stmt)
        self._visit_block(stmt.body, body_env)
        self.loop_stack.pop()
        env.clear()
        env.update(_join_envs(pre, body_env))
        self._visit_block(stmt.orelse, env)

    def stmt_With(self, stmt: ast.With, env: dict[str, Provenance]) -> None:
        for item in stmt.items:
            value = self.eval(item.context_expr, env)
            if item.optional_vars is not None:
                self._assign_target(item.optional_vars, value, env)
        self._visit_block(stmt.body, env)

    stmt_AsyncWith = stmt_With

    def stmt_Try(self, stmt: ast.Try, env: dict[str, Provenance]) -> None:
        self._visit_block(stmt.body, env)
        for handler in stmt.handlers:
            if handler.type is not None:
                self.eval(handler.type, env)
            self._visit_block(handler.body, env)
        self._visit_block(stmt.orelse, env)
        self._visit_block(stmt.finalbody, env)

    def stmt_FunctionDef(self, stmt, env: dict[str, Provenance]) -> None:
        for dec in stmt.decorator_list:
            self.eval(dec, env)
        self.model.def_index.append(
            DefFact(stmt, stmt.name, "function", (), node_span(self.model.unit, stmt))
        )
        inner = dict(env)
        for arg in _all_args(stmt.args):
            inner[arg.arg] = UNKNOWN_PROV
        saved_loops = self.loop_stack
        self.loop_stack = []
        self._enter_body(stmt)
        self._visit_block(stmt.body, inner)
        self.body_stack.pop()
        self.loop_stack = saved_loops

    stmt_AsyncFunctionDef = stmt_FunctionDef

    def stmt_ClassDef(self, stmt: ast.ClassDef, env: dict[str, Provenance]) -> None:
        for dec in stmt.decorator_list:
            self.eval(dec, env)
        bases = tuple(
            canon for canon in (self.model.aliases.resolve_expr(b) for b in stmt.bases)
            if canon is not None
        )
        self.model.def_index.append(
            DefFact(stmt, stmt.name, "class", bases, node_span(self.model.unit, stmt))
        )
        inner = dict(env)
        self._visit_block(stmt.body, inner)

    # -- expressions -------------------------------------------------------

    def eval(self, node: ast.expr, env: dict[str, Provenance]) -> Provenance:
        prov = self._eval_inner(node, env)
        self.model.expr_prov[id(node)] = prov
        return prov

    def _eval_inner(self, node: ast.expr, env: dict[str, Provenance]) -> Provenance:
        if isinstance(node, ast.Name):
            return env.get(node.id, UNKNOWN_PROV)
        if isinstance(node, ast.Call):
            return self._eval_call(node, env)
        if isinstance(node, ast.Attribute):
            recv = self.eval(node.value, env)
            result = self.sig.attributes.get(recv.tag, {}).get(node.attr)
            if result is not None:
                return Provenance(result, ctor=recv.ctor, via=f"{recv.tag}.{node.attr}")
            return UNKNOWN_PROV
        if isinstance(node, ast.Subscript):
            recv = self.eval(node.value, env)
            self.eval(node.slice, env)
            result = self.sig.subscripts.get(recv.tag)
            if result is not None:
                return Provenance(result, ctor=recv.ctor)
            return UNKNOWN_PROV
        if isinstance(node, ast.BinOp):
            left = self.eval(node.left, env)
            right = self.eval(node.right, env)
            return _join_arith(left, right)
        if isinstance(node, ast.UnaryOp):
            operand = self.eval(node.operand, env)
            return Provenance(operand.tag) if operand.known else UNKNOWN_PROV
        if isinstance(node, ast.IfExp):
            self.eval(node.test, env)
            return _join(self.eval(node.body, env), self.eval(node.orelse, env))
        if isinstance(node, ast.Lambda):
            inner = dict(env)
            for arg in _all_args(node.args):
                inner[arg.arg] = UNKNOWN_PROV
            self.eval(node.body, inner)
            return UNKNOWN_PROV
        if isinstance(node, (ast.ListComp, ast.SetComp, ast.GeneratorExp, ast.DictComp)):
            inner = dict(env)
            for gen in node.generators:
                self.eval(gen.iter, inner)
                self._assign_target(gen.target, UNKNOWN_PROV, inner)
                for cond in gen.ifs:
                    self.eval(cond, inner)
            if isinstance(node, ast.DictComp):
                self.eval(node.key, inner)
                self.eval(node.value, inner)
            else:
                self.eval(node.elt, inner)
            return UNKNOWN_PROV
        # Generic: evaluate expression children, result Unknown.
        for child in ast.iter_child_nodes(node):
            if isinstance(child, ast.expr):
                self.eval(child, env)
        return UNKNOWN_PROV

    def _eval_call(self, node: ast.Call, env: dict[str, Provenance]) -> Provenance:
        func = node.func
        method: Optional[str] = None
        receiver: Optional[ast.expr] = None
        receiver_name: Optional[str] = None
        receiver_prov = UNKNOWN_PROV
        if isinstance(func, ast.Attribute):
            method = func.attr
            receiver = func.value
            receiver_prov = self.eval(receiver, env)
            if isinstance(receiver, ast.Name):
                receiver_name = receiver.id
        elif not isinstance(func, ast.Name):
            self.eval(func, env)
        canonical = self.model.aliases.resolve_expr(func)

        for arg in node.args:
            self.eval(arg, env)
        for kw in node.keywords:
            self.eval(kw.value, env)

        prov = self._call_result(node, func, canonical, method, receiver_prov)
        fact = CallFact(
            node=node,
            callee=canonical,
            method=method,
            receiver=receiver,
            receiver_name=receiver_name,
            receiver_prov=receiver_prov,
            stmt_index=self.stmt_index,
            loop_depth=len(self.loop_stack),
            loops=tuple(id(n) for n in self.loop_stack),
            body=self.body_stack[-1],
            span=node_span(self.model.unit, node),
        )
        self.model.call_index.append(fact)
        self.model._body_facts[id(self.body_stack[-1])].append(fact)
        self.model._call_by_node[id(node)] = fact
        return prov

    def _call_result(self, node: ast.Call, func: ast.expr, canonical: Optional[str],
                     method: Optional[str], receiver_prov: Provenance) -> Provenance:
        if canonical is not None and canonical in self.sig.constructors:
            tag = self.sig.constructors[canonical]
            rank = self._literal_rank(node, canonical)
            return Provenance(tag, rank=rank, ctor=canonical)
        if isinstance(func, ast.Name) and func.id in self.model.model_classes:
            return Provenance(MODEL, ctor=func.id)
        if method is not None and receiver_prov.known:
            result = self.sig.methods.get(receiver_prov.tag, {}).get(method)
            if result is not None:
                return Provenance(
                    result, ctor=receiver_prov.ctor,
                    via=f"{receiver_prov.tag}.{method}",
                )
            return UNKNOWN_PROV
        basename = method if method is not None else (
            func.id if isinstance(func, ast.Name) else None
        )
        if basename is not None:
            lowered = basename.lower()
            if lowered in self.sig.loss_basenames or lowered.endswith("loss"):
                return Provenance(TENSOR, via="loss")
        return UNKNOWN_PROV

    def _literal_rank(self, node: ast.Call, canonical: str) -> Optional[int]:
        if not node.args:
            return None
        first = node.args[0]
        if canonical in self.sig.rank_shape_ctors:
            if isinstance(first, (ast.Tuple, ast.List)):
                return len(first.elts)
            if isinstance(first, ast.Constant) and isinstance(first.value, int):
                return 1
        elif canonical in self.sig.rank_nested_ctors:
            depth = 0
            probe: ast.expr = first
            while isinstance(probe, (ast.List, ast.Tuple)):
                depth += 1
                if not probe.elts:
                    break
                probe = probe.elts[0]
            if depth > 0 or isinstance(probe, ast.Constant):
                return depth
        return None


def _all_args(args: ast.arguments):
    yield from args.posonlyargs
    yield from args.args
    if args.vararg:
        yield args.vararg
    yield from args.kwonlyargs
    if args.kwarg:
        yield args.kwarg


def _join(a: Provenance, b: Provenance) -> Provenance:
    if a == b:
        return a
    if a.tag == b.tag:
        return Provenance(a.tag, ctor=a.ctor if a.ctor == b.ctor else None)
    return UNKNOWN_PROV


def _join_arith(a: Provenance, b: Provenance) -> Provenance:
    """Arithmetic keeps a single known operand category; rank is dropped."""
    if a.known and b.known:
        return Provenance(a.tag) if a.tag == b.tag else UNKNOWN_PROV
    if a.known:
        return Provenance(a.tag)
    if b.known:
        return Provenance(b.tag)
    return UNKNOWN_PROV


def _join_envs(a: dict[str, Provenance], b: dict[str, Provenance]) -> dict[str, Provenance]:
    out: dict[str, Provenance] = {}
    for name in set(a) | set(b):
        out[name] = _join(a.get(name, UNKNOWN_PROV), b.get(name, UNKNOWN_PROV))
    return out
