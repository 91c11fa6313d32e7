"""Parsing front end: source units, spans and line/column bookkeeping.

Columns are 1-based and counted in characters (not bytes), which is what
editors and SARIF consumers expect.  The CPython ``ast`` module reports
``col_offset`` as a UTF-8 byte offset, so every span produced here goes
through a byte-to-character conversion.
"""

from __future__ import annotations

import ast
import io
import tokenize
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Span:
    """Half-open character-offset range [start, end) with 1-based locations."""

    start: int
    end: int
    line: int
    column: int
    end_line: int
    end_column: int


@dataclass(frozen=True)
class ParseFailure:
    line: int
    message: str


class LineIndex:
    """Maps character offsets to 1-based (line, column) pairs and back."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.starts = [0]
        for i, ch in enumerate(text):
            if ch == "\n":
                self.starts.append(i + 1)

    def location(self, offset: int) -> tuple[int, int]:
        if offset < 0 or offset > len(self.text):
            raise ValueError(f"offset {offset} out of range")
        lo, hi = 0, len(self.starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.starts[mid] <= offset:
                lo = mid
            else:
                hi = mid - 1
        return lo + 1, offset - self.starts[lo] + 1

    def offset(self, line: int, column: int) -> int:
        if line < 1 or line > len(self.starts):
            raise ValueError(f"line {line} out of range")
        return self.starts[line - 1] + column - 1

    def line_text(self, line: int) -> str:
        start = self.starts[line - 1]
        end = self.starts[line] - 1 if line < len(self.starts) else len(self.text)
        return self.text[start:end]


@dataclass
class SourceUnit:
    """One parsed source file; immutable after construction."""

    path: str
    text: str
    tree: Optional[ast.Module]
    index: LineIndex
    failure: Optional[ParseFailure] = None
    comments: dict[int, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.tree is not None


def parse(path: str, text: str) -> SourceUnit:
    """Parse ``text`` into a SourceUnit; syntax errors become a ParseFailure
    value instead of an exception."""
    index = LineIndex(text)
    try:
        tree = ast.parse(text, filename=path)
    except SyntaxError as exc:
        failure = ParseFailure(line=exc.lineno or 1, message=exc.msg or "syntax error")
        return SourceUnit(path=path, text=text, tree=None, index=index, failure=failure)
    except (ValueError, RecursionError, MemoryError) as exc:
        # Null bytes and pathological nesting raise non-SyntaxError exceptions.
        failure = ParseFailure(line=1, message=str(exc) or type(exc).__name__)
        return SourceUnit(path=path, text=text, tree=None, index=index, failure=failure)
    return SourceUnit(
        path=path, text=text, tree=tree, index=index, comments=_collect_comments(text)
    )


def _collect_comments(text: str) -> dict[int, str]:
    comments: dict[int, str] = {}
    try:
        for tok in tokenize.generate_tokens(io.StringIO(text).readline):
            if tok.type == tokenize.COMMENT:
                comments[tok.start[0]] = tok.string
    except (tokenize.TokenError, IndentationError, SyntaxError):
        pass
    return comments


def _char_column(index: LineIndex, lineno: int, byte_col: int) -> int:
    """Convert an ast byte column on ``lineno`` to a 0-based character column."""
    line = index.line_text(lineno)
    raw = line.encode("utf-8")
    return len(raw[:byte_col].decode("utf-8", errors="replace"))


def node_span(unit: SourceUnit, node: ast.AST) -> Span:
    """Character span of an AST node within its unit."""
    lineno = getattr(node, "lineno", 1)
    col = _char_column(unit.index, lineno, getattr(node, "col_offset", 0))
    end_lineno = getattr(node, "end_lineno", None) or lineno
    end_byte = getattr(node, "end_col_offset", None)
    end_col = _char_column(unit.index, end_lineno, end_byte) if end_byte is not None else col
    start = unit.index.offset(lineno, col + 1)
    end = unit.index.offset(end_lineno, end_col + 1)
    return Span(
        start=start,
        end=end,
        line=lineno,
        column=col + 1,
        end_line=end_lineno,
        end_column=end_col + 1,
    )


def span_text(unit: SourceUnit, span: Span) -> str:
    return unit.text[span.start : span.end]


def span_to_location(unit: SourceUnit, span: Span) -> tuple[int, int]:
    """1-based (line, column) of the span start."""
    return unit.index.location(span.start)
