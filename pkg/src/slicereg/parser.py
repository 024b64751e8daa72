"""Expression front end: tokenizer, precedence-climbing parser, and lowering
to exact slice functions or numeric stem callables.

Grammar: `+`/`-` < `*` (slice product) < `^n` (slice power); unary minus;
quaternion number literals `p/q` or decimals; constants i, j, k; variable x;
built-ins Delta(q0), ellp(J), ellm(J), Jfun(), exp().  A number immediately
followed by i/j/k (as in `1/2i`) is implicit multiplication.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import ExpressionSyntaxError, UnknownIdentifier
from .numeric import NumericSliceFunction, exp_function, wrap_slice_function
from .quaternion import Quaternion, scalar
from .slicefn import (SliceFunction, char_poly, constant, idempotent,
                      j_function, slice_power, slice_product, variable)

# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Union[Fraction, float]


@dataclass(frozen=True)
class Const:
    name: str  # i, j, k


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Call:
    name: str
    arg: Optional["Expr"]


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


Expr = Union[Num, Const, Var, Call, Unary, Binary, Power]

BUILTINS = {"Delta": 1, "ellp": 1, "ellm": 1, "Jfun": 0, "exp": 0}

# -- tokenizer ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:/\d+|\.\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExpressionSyntaxError(
                f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            tokens.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# -- parser -------------------------------------------------------------------

_BIN_PRECEDENCE = {"+": 1, "-": 1, "*": 2}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.peek()
        if tok.text != text:
            raise ExpressionSyntaxError(
                f"expected {text!r}, found {tok.text or 'end of input'!r}",
                tok.offset)
        return self.advance()

    def parse(self) -> Expr:
        expr = self.parse_expr(0)
        tok = self.peek()
        if tok.kind != "eof":
            raise ExpressionSyntaxError(
                f"unexpected trailing input {tok.text!r}", tok.offset)
        return expr

    def parse_expr(self, min_prec: int) -> Expr:
        left = self.parse_unary()
        while True:
            tok = self.peek()
            prec = _BIN_PRECEDENCE.get(tok.text)
            if tok.kind != "op" or prec is None or prec < min_prec:
                return left
            self.advance()
            right = self.parse_expr(prec + 1)  # left associative
            left = Binary(tok.text, left, right)

    def parse_unary(self) -> Expr:
        tok = self.peek()
        if tok.text == "-":
            self.advance()
            return Unary("-", self.parse_unary())
        if tok.text == "+":
            self.advance()
            return self.parse_unary()
        return self.parse_postfix()

    def parse_postfix(self) -> Expr:
        expr = self.parse_primary()
        while self.peek().text == "^":
            self.advance()
            tok = self.peek()
            if tok.kind != "num" or not tok.text.isdigit():
                raise ExpressionSyntaxError(
                    "exponent must be a nonnegative integer", tok.offset)
            self.advance()
            expr = Power(expr, int(tok.text))
        return expr

    def parse_primary(self) -> Expr:
        tok = self.peek()
        if tok.text == "(":
            self.advance()
            inner = self.parse_expr(0)
            self.expect(")")
            return inner
        if tok.kind == "num":
            self.advance()
            node: Expr = Num(scalar(tok.text))
            nxt = self.peek()
            # `1/2i` style juxtaposition with a unit
            if (nxt.kind == "name" and nxt.text in ("i", "j", "k")
                    and nxt.offset == tok.offset + len(tok.text)):
                self.advance()
                node = Binary("*", node, Const(nxt.text))
            return node
        if tok.kind == "name":
            self.advance()
            name = tok.text
            if name in ("i", "j", "k"):
                return Const(name)
            if name == "x":
                return Var()
            if name in BUILTINS:
                self.expect("(")
                arg: Optional[Expr] = None
                if self.peek().text != ")":
                    arg = self.parse_expr(0)
                self.expect(")")
                if BUILTINS[name] == 1 and arg is None:
                    raise ExpressionSyntaxError(
                        f"{name} needs one argument", tok.offset)
                if name == "exp" and arg is not None and not isinstance(arg, Var):
                    raise ExpressionSyntaxError(
                        "exp only supports the bare variable x", tok.offset)
                return Call(name, arg)
            raise UnknownIdentifier(f"unknown identifier {name!r} at offset {tok.offset}")
        raise ExpressionSyntaxError(
            f"expected an expression, found {tok.text or 'end of input'!r}",
            tok.offset)


def parse_expression(text: str) -> Expr:
    return _Parser(text).parse()


# -- analysis / lowering -------------------------------------------------------


def contains_exp(expr: Expr) -> bool:
    if isinstance(expr, Call):
        return expr.name == "exp" or (expr.arg is not None and contains_exp(expr.arg))
    if isinstance(expr, Unary):
        return contains_exp(expr.operand)
    if isinstance(expr, Binary):
        return contains_exp(expr.left) or contains_exp(expr.right)
    if isinstance(expr, Power):
        return contains_exp(expr.base)
    return False


def eval_constant(expr: Expr) -> Quaternion:
    """Evaluate an expression without `x` to a quaternion."""
    if isinstance(expr, Num):
        return Quaternion.real(expr.value)
    if isinstance(expr, Const):
        return {"i": Quaternion.of(0, 1), "j": Quaternion.of(0, 0, 1),
                "k": Quaternion.of(0, 0, 0, 1)}[expr.name]
    if isinstance(expr, Unary):
        return -eval_constant(expr.operand)
    if isinstance(expr, Binary):
        left, right = eval_constant(expr.left), eval_constant(expr.right)
        return {"+": left + right, "-": left - right, "*": left * right}[expr.op]
    if isinstance(expr, Power):
        base = eval_constant(expr.base)
        out = Quaternion.of(1)
        for _ in range(expr.exponent):
            out = out * base
        return out
    raise ExpressionSyntaxError("expected a constant quaternion expression", 0)


def lower_symbolic(expr: Expr) -> SliceFunction:
    """Lower to an exact slice function; fails on exp()."""
    if isinstance(expr, Num):
        return constant(Quaternion.real(expr.value))
    if isinstance(expr, Const):
        return constant(eval_constant(expr))
    if isinstance(expr, Var):
        return variable()
    if isinstance(expr, Unary):
        return -lower_symbolic(expr.operand)
    if isinstance(expr, Binary):
        left, right = lower_symbolic(expr.left), lower_symbolic(expr.right)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        return slice_product(left, right)
    if isinstance(expr, Power):
        return slice_power(lower_symbolic(expr.base), expr.exponent)
    if isinstance(expr, Call):
        if expr.name == "Delta":
            return char_poly(eval_constant(expr.arg))
        if expr.name == "ellp":
            return idempotent(eval_constant(expr.arg), "+")
        if expr.name == "ellm":
            return idempotent(eval_constant(expr.arg), "-")
        if expr.name == "Jfun":
            return j_function()
        raise UnknownIdentifier(
            "exp() has no exact stem; use the numeric commands")
    raise AssertionError(f"unhandled node {expr!r}")


def lower_numeric(expr: Expr) -> NumericSliceFunction:
    """Lower to callable stem components; handles exp() and everything else
    via the stem-product rule, so slice products stay correct."""
    if not contains_exp(expr):
        return wrap_slice_function(lower_symbolic(expr))
    if isinstance(expr, Call) and expr.name == "exp":
        return exp_function()
    if isinstance(expr, Unary):
        inner = lower_numeric(expr.operand)
        return NumericSliceFunction(lambda a, b: -inner.f0(a, b),
                                    lambda a, b: -inner.f1(a, b))
    if isinstance(expr, Binary):
        lf, rf = lower_numeric(expr.left), lower_numeric(expr.right)
        if expr.op == "+":
            return NumericSliceFunction(lambda a, b: lf.f0(a, b) + rf.f0(a, b),
                                        lambda a, b: lf.f1(a, b) + rf.f1(a, b))
        if expr.op == "-":
            return NumericSliceFunction(lambda a, b: lf.f0(a, b) - rf.f0(a, b),
                                        lambda a, b: lf.f1(a, b) - rf.f1(a, b))
        return NumericSliceFunction(
            lambda a, b: lf.f0(a, b) * rf.f0(a, b) - lf.f1(a, b) * rf.f1(a, b),
            lambda a, b: lf.f0(a, b) * rf.f1(a, b) + lf.f1(a, b) * rf.f0(a, b))
    if isinstance(expr, Power):
        out = lower_numeric(Num(Fraction(1)))
        for _ in range(expr.exponent):
            out = _numeric_product(out, lower_numeric(expr.base))
        return out
    return wrap_slice_function(lower_symbolic(expr))


def _numeric_product(lf: NumericSliceFunction,
                     rf: NumericSliceFunction) -> NumericSliceFunction:
    return NumericSliceFunction(
        lambda a, b: lf.f0(a, b) * rf.f0(a, b) - lf.f1(a, b) * rf.f1(a, b),
        lambda a, b: lf.f0(a, b) * rf.f1(a, b) + lf.f1(a, b) * rf.f0(a, b))
