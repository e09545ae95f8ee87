"""Quantifier-free formulas over ordered points.

A formula is a boolean combination of order comparisons between positions
of an integer point. Atoms compare two variable indices, e.g. ``lt 0 1``
holds on a point ``p`` iff ``p[0] < p[1]``. Integer points stand in for
rational ones: on finite sets only the relative order matters.

The concrete syntax is a small s-expression language::

    formula := "true" | "false" | "(" op ")"
    op      := ("lt"|"le"|"eq"|"ne"|"gt"|"ge") index index
             | "not" formula
             | "and" formula+
             | "or" formula+

``parse_formula`` and ``print_formula`` round-trip exactly; the six
comparison operators are distinct AST nodes, never rewritten into each
other.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .errors import FormulaError

ATOM_OPS = {
    "lt": operator.lt,
    "le": operator.le,
    "eq": operator.eq,
    "ne": operator.ne,
    "gt": operator.gt,
    "ge": operator.ge,
}


class Formula:
    """Base class for AST nodes. Nodes are immutable and hashable.

    ``free_var_count`` is 1 + the largest variable index used (0 when no
    atom occurs), computed once at construction.
    """

    free_var_count: int

    def _set(self, **kw):
        for key, value in kw.items():
            object.__setattr__(self, key, value)


@dataclass(frozen=True)
class Const(Formula):
    value: bool

    def __post_init__(self):
        self._set(free_var_count=0)


@dataclass(frozen=True)
class Atom(Formula):
    op: str
    left: int
    right: int

    def __post_init__(self):
        if self.op not in ATOM_OPS:
            raise ValueError(f"unknown comparison operator {self.op!r}")
        if self.left < 0 or self.right < 0:
            raise ValueError("variable indices must be non-negative")
        self._set(free_var_count=max(self.left, self.right) + 1)


@dataclass(frozen=True)
class Not(Formula):
    child: Formula

    def __post_init__(self):
        self._set(free_var_count=self.child.free_var_count)


@dataclass(frozen=True)
class And(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.children) < 1:
            raise ValueError("and needs at least one child")
        self._set(free_var_count=max(c.free_var_count for c in self.children))


@dataclass(frozen=True)
class Or(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.children) < 1:
            raise ValueError("or needs at least one child")
        self._set(free_var_count=max(c.free_var_count for c in self.children))


TRUE = Const(True)
FALSE = Const(False)


def lt(i, j):
    return Atom("lt", i, j)


def le(i, j):
    return Atom("le", i, j)


def eq(i, j):
    return Atom("eq", i, j)


def ne(i, j):
    return Atom("ne", i, j)


def gt(i, j):
    return Atom("gt", i, j)


def ge(i, j):
    return Atom("ge", i, j)


def not_(f):
    return Not(f)


def and_(*fs):
    return And(tuple(fs))


def or_(*fs):
    return Or(tuple(fs))


def compile_formula(f: Formula):
    """Turn a formula into a ``point -> bool`` closure (cached per node)."""
    fn = getattr(f, "_fn", None)
    if fn is None:
        fn = _build(f)
        f._set(_fn=fn)
    return fn


def _build(f):
    if isinstance(f, Const):
        value = f.value
        return lambda p: value
    if isinstance(f, Atom):
        cmp, i, j = ATOM_OPS[f.op], f.left, f.right
        return lambda p: cmp(p[i], p[j])
    if isinstance(f, Not):
        sub = compile_formula(f.child)
        return lambda p: not sub(p)
    if isinstance(f, And):
        subs = tuple(compile_formula(c) for c in f.children)
        return lambda p: all(s(p) for s in subs)
    if isinstance(f, Or):
        subs = tuple(compile_formula(c) for c in f.children)
        return lambda p: any(s(p) for s in subs)
    raise TypeError(f"not a formula: {f!r}")


def eval_formula(f: Formula, point) -> bool:
    """Evaluate ``f`` on an integer point (a sequence of ints).

    The point must be at least as long as the formula's free-variable
    count; extra positions are ignored.
    """
    if len(point) < f.free_var_count:
        raise ValueError(
            f"point of length {len(point)} too short for formula with "
            f"{f.free_var_count} free variables"
        )
    return compile_formula(f)(point)


def print_formula(f: Formula) -> str:
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Atom):
        return f"({f.op} {f.left} {f.right})"
    if isinstance(f, Not):
        return f"(not {print_formula(f.child)})"
    if isinstance(f, And):
        return "(and " + " ".join(print_formula(c) for c in f.children) + ")"
    if isinstance(f, Or):
        return "(or " + " ".join(print_formula(c) for c in f.children) + ")"
    raise TypeError(f"not a formula: {f!r}")


def _tokenize(text):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            tokens.append((c, i))
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            tokens.append((text[i:j], i))
            i = j
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.end = len(text)

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, self.end)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message, position):
        raise FormulaError(message, position)

    def parse_formula(self):
        tok, at = self.next()
        if tok is None:
            self.fail("unexpected end of input", at)
        if tok == "true":
            return TRUE
        if tok == "false":
            return FALSE
        if tok == ")":
            self.fail("unexpected ')'", at)
        if tok != "(":
            self.fail(f"expected formula, got {tok!r}", at)
        op, op_at = self.next()
        if op is None:
            self.fail("unexpected end of input after '('", op_at)
        if op in ATOM_OPS:
            i = self.parse_index(op)
            j = self.parse_index(op)
            self.expect_close(op)
            return Atom(op, i, j)
        if op == "not":
            child = self.parse_formula()
            self.expect_close(op)
            return Not(child)
        if op in ("and", "or"):
            children = []
            while True:
                tok, at = self.peek()
                if tok == ")":
                    self.next()
                    break
                if tok is None:
                    self.fail(f"unterminated ({op} ...)", at)
                children.append(self.parse_formula())
            if not children:
                self.fail(f"'{op}' needs at least one operand", op_at)
            return (And if op == "and" else Or)(tuple(children))
        self.fail(f"unknown operator {op!r}", op_at)

    def parse_index(self, op):
        tok, at = self.next()
        if tok is None or tok in "()":
            self.fail(f"'{op}' expects two indices", at)
        if not tok.isdigit():
            self.fail(f"expected non-negative integer index, got {tok!r}", at)
        return int(tok)

    def expect_close(self, op):
        tok, at = self.next()
        if tok != ")":
            shown = "end of input" if tok is None else repr(tok)
            self.fail(f"expected ')' closing '{op}', got {shown}", at)


def parse_formula(text: str) -> Formula:
    """Parse s-expression formula text; raises FormulaError on bad input."""
    parser = _Parser(text)
    f = parser.parse_formula()
    tok, at = parser.peek()
    if tok is not None:
        parser.fail(f"trailing input {tok!r}", at)
    return f
