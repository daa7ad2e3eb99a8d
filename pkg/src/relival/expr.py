"""Expression language: AST, parser, printer, structural queries.

Grammar (left-associative, usual precedence):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := IDENT | NUMBER | '(' expr ')'
            | ('-' | 'abs' | 'sqrt' | 'sqrtr') factor

Identifiers match ``[a-zA-Z_][a-zA-Z0-9_]*``; ``abs``, ``sqrt`` and
``sqrtr`` are reserved operation words.  Number literals do not appear in
the AST: the parser replaces each with a fresh variable (``_c0``,
``_c1``, ... skipping names already used in the source) and returns a
binding that records the literal's exact value.  Evaluators then treat
constants as degenerate arguments, so the core semantics only ever deals
with variables and operation symbols.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

__all__ = [
    "Expr",
    "Var",
    "Unary",
    "Binary",
    "Binding",
    "ParseError",
    "parse",
    "to_source",
    "variable_sequence",
    "depth",
    "occurs_once",
    "UNARY_WORDS",
]

UNARY_WORDS = ("abs", "sqrt", "sqrtr")


class Expr:
    """Base class for AST nodes."""

    __match_args__ = ()


@dataclass(frozen=True)
class Var(Expr):
    name: str


@dataclass(frozen=True)
class Unary(Expr):
    op: str  # "neg", "abs", "sqrt" or "sqrtr"
    child: Expr


@dataclass(frozen=True)
class Binary(Expr):
    op: str  # "+", "-", "*" or "/"
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Binding:
    """A desugared number literal: fresh variable name, source text, exact value."""

    name: str
    literal: str
    value: Fraction


class ParseError(ValueError):
    """Syntax error with a source position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*/()])"
    r"|(?P<ws>\s+)"
    r"|(?P<bad>.)"
)


def _tokenize(source: str):
    tokens = []
    for m in _TOKEN.finditer(source):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", m.start())
        tokens.append((kind, m.group(), m.start()))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.pos = 0
        self.bindings: list[Binding] = []
        self._used = {t for k, t, _ in self.tokens if k == "ident"}
        self._fresh = 0

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (None, "", len(self.source))

    def _advance(self):
        tok = self._peek()
        self.pos += 1
        return tok

    def _fresh_name(self) -> str:
        while True:
            name = f"_c{self._fresh}"
            self._fresh += 1
            if name not in self._used:
                self._used.add(name)
                return name

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, at = self._peek()
        if kind is not None:
            raise ParseError(f"unexpected {text!r} after expression", at)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while True:
            kind, text, _ = self._peek()
            if kind == "op" and text in ("+", "-"):
                self._advance()
                e = Binary(text, e, self.term())
            else:
                return e

    def term(self) -> Expr:
        e = self.factor()
        while True:
            kind, text, _ = self._peek()
            if kind == "op" and text in ("*", "/"):
                self._advance()
                e = Binary(text, e, self.factor())
            else:
                return e

    def factor(self) -> Expr:
        kind, text, at = self._advance()
        if kind == "op" and text == "-":
            return Unary("neg", self.factor())
        if kind == "op" and text == "(":
            e = self.expr()
            k2, t2, a2 = self._advance()
            if not (k2 == "op" and t2 == ")"):
                raise ParseError("expected ')'", a2)
            return e
        if kind == "ident":
            if text in UNARY_WORDS:
                return Unary(text, self.factor())
            k2, t2, a2 = self._peek()
            if k2 == "op" and t2 == "(":
                raise ParseError(f"unknown operation symbol {text!r}", at)
            return Var(text)
        if kind == "num":
            name = self._fresh_name()
            self.bindings.append(Binding(name, text, Fraction(Decimal(text))))
            return Var(name)
        if kind is None:
            raise ParseError("unexpected end of input", at)
        raise ParseError(f"unexpected {text!r}", at)


def parse(source: str) -> "tuple[Expr, list[Binding]]":
    """Parse a source string into an AST plus its constant bindings.

    Bindings are listed in order of literal occurrence; the AST refers to
    them by their fresh variable names.
    """
    p = _Parser(source)
    ast = p.parse()
    return ast, p.bindings


_PREC = {"+": 10, "-": 10, "*": 20, "/": 20}


def to_source(e: Expr) -> str:
    """Render an AST back to source; ``parse(to_source(e))`` rebuilds ``e``.

    Word unaries always parenthesize their argument; infix children get
    parentheses exactly where precedence or left-associativity demands.
    """
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Unary):
        if e.op == "neg":
            inner = to_source(e.child)
            if isinstance(e.child, Binary):
                return f"-({inner})"
            return f"-{inner}"
        return f"{e.op}({to_source(e.child)})"
    prec = _PREC[e.op]
    left = to_source(e.left)
    if isinstance(e.left, Binary) and _PREC[e.left.op] < prec:
        left = f"({left})"
    right = to_source(e.right)
    if isinstance(e.right, Binary) and _PREC[e.right.op] <= prec:
        right = f"({right})"
    return f"{left} {e.op} {right}"


def variable_sequence(e: Expr) -> "tuple[str, ...]":
    """Distinct variables of ``e``, ordered by first occurrence (left to
    right, depth first).  Cached on the node."""
    cached = e.__dict__.get("_varseq")
    if cached is not None:
        return cached
    if isinstance(e, Var):
        seq = (e.name,)
    elif isinstance(e, Unary):
        seq = variable_sequence(e.child)
    else:
        left = variable_sequence(e.left)
        seen = set(left)
        seq = left + tuple(w for w in variable_sequence(e.right) if w not in seen)
    e.__dict__["_varseq"] = seq
    return seq


def depth(e: Expr) -> int:
    """Longest path from the root to a leaf, counting nodes; a leaf is 1."""
    if isinstance(e, Var):
        return 1
    if isinstance(e, Unary):
        return 1 + depth(e.child)
    return 1 + max(depth(e.left), depth(e.right))


def _leaf_names(e: Expr, out: list):
    if isinstance(e, Var):
        out.append(e.name)
    elif isinstance(e, Unary):
        _leaf_names(e.child, out)
    else:
        _leaf_names(e.left, out)
        _leaf_names(e.right, out)


def occurs_once(e: Expr) -> bool:
    """True when no variable appears at more than one leaf."""
    names: list = []
    _leaf_names(e, names)
    return len(names) == len(set(names))
