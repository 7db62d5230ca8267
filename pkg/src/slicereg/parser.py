"""Expression syntax for slice regular polynomials.

Grammar (``*`` is always the star product, ``^`` a star power)::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER [ijk]? | 'i' | 'j' | 'k' | VAR | '(' expr ')'
    NUMBER := digits ('/' digits)?
    VAR    := 'q' digits | 'q'   (bare 'q' only with one variable)

Juxtaposition is not multiplication, and decimal floats are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import PolySyntaxError, UnknownVariable
from .polyring import SlicePoly
from .quatcore import I, J, K, Quaternion

_UNITS = {"i": I, "j": J, "k": K}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+)?(?![\d.]))(?P<suffix>[ijk](?![A-Za-z0-9_]))?
  | (?P<var>q\d*(?![A-Za-z_]))
  | (?P<unit>[ijk](?![A-Za-z0-9_]))
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Num:
    value: Quaternion


@dataclass(frozen=True)
class Var:
    name: str
    pos: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


Expr = Union[Num, Var, Neg, BinOp, Pow]


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if re.match(r"\d*\.\d", text[pos:]):
                raise PolySyntaxError("decimal literals are not accepted; use p/q", pos)
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", m.group("num") + (m.group("suffix") or ""), pos))
        elif m.group("var") is not None:
            tokens.append(("var", m.group("var"), pos))
        elif m.group("unit") is not None:
            tokens.append(("unit", m.group("unit"), pos))
        elif m.group("op") is not None:
            tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise PolySyntaxError(f"expected {op!r}", pos)

    def parse(self) -> Expr:
        e = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {value!r}", pos)
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            e = BinOp(op, e, self.term())
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            e = BinOp("*", e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, value, pos = self.take()
            if kind != "num" or not value.isdigit():
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            return Pow(base, int(value))
        return base

    def atom(self) -> Expr:
        kind, value, pos = self.take()
        if kind == "num":
            if value[-1] in _UNITS:
                return Num(_UNITS[value[-1]] * Fraction(value[:-1]))
            return Num(Quaternion(Fraction(value)))
        if kind == "unit":
            return Num(_UNITS[value])
        if kind == "var":
            return Var(value, pos)
        if kind == "op" and value == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        raise PolySyntaxError(f"unexpected {value or 'end of input'!r}", pos)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


def _var_index(v: Var, nvars: int) -> int:
    if v.name == "q":
        if nvars == 1:
            return 1
        raise UnknownVariable(f"bare 'q' is ambiguous with {nvars} variables (at {v.pos})")
    m = int(v.name[1:])
    if not 1 <= m <= nvars:
        raise UnknownVariable(f"{v.name} is outside q1..q{nvars} (at {v.pos})")
    return m


def lower(e: Expr, nvars: int) -> SlicePoly:
    """Evaluate the syntax tree with ring operations into a canonical polynomial."""
    if isinstance(e, Num):
        return SlicePoly.constant(e.value, nvars)
    if isinstance(e, Var):
        return SlicePoly.var(_var_index(e, nvars), nvars)
    if isinstance(e, Neg):
        return -lower(e.operand, nvars)
    if isinstance(e, Pow):
        return lower(e.base, nvars) ** e.exponent
    if isinstance(e, BinOp):
        left, right = lower(e.left, nvars), lower(e.right, nvars)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        return left * right
    raise TypeError(f"unknown node {e!r}")


def parse_poly(text: str, nvars: int) -> SlicePoly:
    return lower(parse(text), nvars)


def infer_nvars(text: str) -> int:
    """Largest variable index mentioned (1 if none, or only bare ``q``)."""
    indices = [int(v[1:]) for kind, v, _ in tokenize(text) if kind == "var" and len(v) > 1]
    return max(indices, default=1)
