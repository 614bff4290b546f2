"""Expression language for user-supplied maps.

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := base ("^" exponent)?
    base   := number | "x" | "(" expr ")"
    exponent := signed number | "(" signed number ("/" integer)? ")"

A bare exponent binds one literal only, so "x^3/2" reads as (x^3)/2 and a
fractional power is written "x^(3/2)".
"""

from __future__ import annotations

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from gdconj_maps.errors import ExpressionSyntaxError, MapDomainError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)|(?P<var>x)|(?P<op>[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(source):
        if source[pos:].strip() == "":
            break
        match = _TOKEN.match(source, pos)
        if match is None:
            bad = pos + (len(source[pos:]) - len(source[pos:].lstrip()))
            raise ExpressionSyntaxError(f"unexpected character {source[bad]!r}", bad)
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(source)))
    return tokens


# ----- AST -----


class Expr(ABC):
    @abstractmethod
    def evaluate(self, x: Any) -> Any:
        """Evaluate on a float or a numpy array."""

    @abstractmethod
    def exact(self, x: Fraction) -> Fraction | None:
        """Exact value at a rational point, or None when it is irrational."""

    @abstractmethod
    def render(self) -> str:
        ...


@dataclass(frozen=True)
class Num(Expr):
    value: Fraction

    def evaluate(self, x: Any) -> Any:
        return float(self.value)

    def exact(self, x: Fraction) -> Fraction | None:
        return self.value

    def render(self) -> str:
        return _render_rational(self.value)


@dataclass(frozen=True)
class Var(Expr):
    def evaluate(self, x: Any) -> Any:
        return x

    def exact(self, x: Fraction) -> Fraction | None:
        return x

    def render(self) -> str:
        return "x"


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr

    def evaluate(self, x: Any) -> Any:
        lhs = self.left.evaluate(x)
        rhs = self.right.evaluate(x)
        if self.op == "+":
            return lhs + rhs
        if self.op == "-":
            return lhs - rhs
        if self.op == "*":
            return lhs * rhs
        if np.ndim(rhs) == 0 and rhs == 0:
            raise MapDomainError("division by zero")
        return lhs / rhs

    def exact(self, x: Fraction) -> Fraction | None:
        lhs = self.left.exact(x)
        rhs = self.right.exact(x)
        if lhs is None or rhs is None:
            return None
        if self.op == "+":
            return lhs + rhs
        if self.op == "-":
            return lhs - rhs
        if self.op == "*":
            return lhs * rhs
        if rhs == 0:
            raise MapDomainError("division by zero")
        return lhs / rhs

    def render(self) -> str:
        return f"({self.left.render()} {self.op} {self.right.render()})"


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Fraction

    def evaluate(self, x: Any) -> Any:
        value = self.base.evaluate(x)
        if self.exponent.denominator == 1:
            return value ** int(self.exponent)
        if np.any(np.asarray(value) < 0):
            raise MapDomainError("fractional power of a negative number")
        return value ** float(self.exponent)

    def exact(self, x: Fraction) -> Fraction | None:
        value = self.base.exact(x)
        if value is None:
            return None
        p, q = self.exponent.numerator, self.exponent.denominator
        if value == 0 and p < 0:
            raise MapDomainError("negative power of zero")
        if q == 1:
            return value**p
        if value < 0:
            raise MapDomainError("fractional power of a negative number")
        root = _exact_root(value, q)
        return None if root is None else root**p

    def render(self) -> str:
        return f"{self.base.render()}^{_render_exponent(self.exponent)}"


def compile_expr(expr: Expr) -> Callable[[Any], Any]:
    """Evaluator that silences numpy warnings; callers check finiteness."""

    def run(x: Any) -> Any:
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            return expr.evaluate(x)

    return run


def pretty_expr(expr: Expr) -> str:
    return expr.render()


# ----- Parser -----


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = tokenize(source)
        self.index = 0

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, text: str) -> Token:
        token = self.peek()
        if token.text != text or token.kind == "end":
            raise ExpressionSyntaxError(f"expected {text!r}", token.pos)
        return self.advance()

    def parse(self) -> Expr:
        if self.peek().kind == "end":
            raise ExpressionSyntaxError("empty expression", 0)
        node = self.expr()
        token = self.peek()
        if token.kind != "end":
            raise ExpressionSyntaxError(f"unexpected token {token.text!r}", token.pos)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().kind == "op" and self.peek().text in "+-":
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().kind == "op" and self.peek().text in "*/":
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        node = self.base()
        if self.peek().text == "^":
            self.advance()
            node = Pow(node, self.exponent())
        return node

    def base(self) -> Expr:
        token = self.peek()
        if token.kind == "num":
            self.advance()
            return Num(Fraction(token.text))
        if token.kind == "var":
            self.advance()
            return Var()
        if token.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if token.kind == "end":
            raise ExpressionSyntaxError("unexpected end of expression", token.pos)
        raise ExpressionSyntaxError(f"unexpected token {token.text!r}", token.pos)

    def exponent(self) -> Fraction:
        token = self.peek()
        if token.text == "(":
            self.advance()
            value = self.signed_number()
            if self.peek().text == "/":
                self.advance()
                den = self.peek()
                if den.kind != "num" or not den.text.isdigit() or int(den.text) == 0:
                    raise ExpressionSyntaxError("exponent must be a rational literal", den.pos)
                self.advance()
                value = value / int(den.text)
            self.expect(")")
            return value
        return self.signed_number()

    def signed_number(self) -> Fraction:
        sign = 1
        token = self.peek()
        if token.text in ("-", "+") and token.kind == "op":
            sign = -1 if token.text == "-" else 1
            self.advance()
            token = self.peek()
        if token.kind != "num":
            raise ExpressionSyntaxError("exponent must be a rational literal", token.pos)
        self.advance()
        return sign * Fraction(token.text)


def parse_ast(source: str) -> Expr:
    return _Parser(source).parse()


# ----- Helpers -----


def _iroot(n: int, k: int) -> int:
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _exact_root(value: Fraction, k: int) -> Fraction | None:
    num = _iroot(value.numerator, k)
    den = _iroot(value.denominator, k)
    if num**k == value.numerator and den**k == value.denominator:
        return Fraction(num, den)
    return None


def _render_rational(value: Fraction) -> str:
    if value.denominator == 1 and value >= 0:
        return str(value.numerator)
    if value < 0:
        return f"(0 - {_render_rational(-value)})"
    return f"({value.numerator}/{value.denominator})"


def _render_exponent(value: Fraction) -> str:
    if value.denominator == 1:
        return f"({value.numerator})"
    return f"({value.numerator}/{value.denominator})"
