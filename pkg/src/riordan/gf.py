"""Parser and evaluator for closed-form generating-function expressions.

Grammar (whitespace-insensitive, '*' mandatory, no implicit multiplication)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' unsigned-integer)?
    atom   := integer | 'x' | '(' expr ')' | 'sqrt' '(' expr ')'
            | 'c' '(' expr ')'

``c(u)`` composes the series 1 + u + 2u^2 + 5u^3 + ... (coefficients
binom(2n,n)/(n+1)) with an argument of zero constant term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import PowerSeries, SeriesError


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class SeriesExpr:
    """Base class for parsed generating-function expression nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Num(SeriesExpr):
    value: int


@dataclass(frozen=True)
class Var(SeriesExpr):
    pass


@dataclass(frozen=True)
class Add(SeriesExpr):
    left: SeriesExpr
    right: SeriesExpr


@dataclass(frozen=True)
class Sub(SeriesExpr):
    left: SeriesExpr
    right: SeriesExpr


@dataclass(frozen=True)
class Mul(SeriesExpr):
    left: SeriesExpr
    right: SeriesExpr


@dataclass(frozen=True)
class Div(SeriesExpr):
    left: SeriesExpr
    right: SeriesExpr


@dataclass(frozen=True)
class Neg(SeriesExpr):
    arg: SeriesExpr


@dataclass(frozen=True)
class Pow(SeriesExpr):
    base: SeriesExpr
    exponent: int


@dataclass(frozen=True)
class Sqrt(SeriesExpr):
    arg: SeriesExpr


@dataclass(frozen=True)
class Cgf(SeriesExpr):
    arg: SeriesExpr


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def parse(self) -> SeriesExpr:
        e = self.expr()
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return e

    def expr(self) -> SeriesExpr:
        if self.peek() == "-":
            self.pos += 1
            node: SeriesExpr = Neg(self.term())
        else:
            node = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.pos += 1
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> SeriesExpr:
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.pos += 1
            rhs = self.factor()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def factor(self) -> SeriesExpr:
        node = self.atom()
        if self.peek() == "^":
            self.pos += 1
            node = Pow(node, self.unsigned_int())
        return node

    def unsigned_int(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected an unsigned integer exponent", start)
        return int(self.text[start : self.pos])

    def atom(self) -> SeriesExpr:
        ch = self.peek()
        if ch == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if ch.isdigit():
            return Num(self.unsigned_int())
        if ch.isalpha():
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isalpha():
                self.pos += 1
            name = self.text[start : self.pos]
            if name == "x":
                return Var()
            if name == "sqrt":
                self.take("(")
                e = self.expr()
                self.take(")")
                return Sqrt(e)
            if name == "c":
                self.take("(")
                e = self.expr()
                self.take(")")
                return Cgf(e)
            raise ParseError(f"unknown identifier {name!r}", start)
        raise ParseError(
            f"expected an atom, got {ch!r}" if ch else "unexpected end of input",
            self.pos,
        )


def parse_gf(text: str) -> SeriesExpr:
    """Parse a generating-function expression into its tree form."""
    return _Parser(text).parse()


def _evaluate(expr: SeriesExpr, order: int) -> PowerSeries:
    if isinstance(expr, Num):
        return PowerSeries.constant(expr.value, order)
    if isinstance(expr, Var):
        return PowerSeries.x(order)
    if isinstance(expr, Neg):
        return -_evaluate(expr.arg, order)
    if isinstance(expr, Add):
        return _evaluate(expr.left, order) + _evaluate(expr.right, order)
    if isinstance(expr, Sub):
        return _evaluate(expr.left, order) - _evaluate(expr.right, order)
    if isinstance(expr, Mul):
        return _evaluate(expr.left, order) * _evaluate(expr.right, order)
    if isinstance(expr, Div):
        return _evaluate(expr.left, order) / _evaluate(expr.right, order)
    if isinstance(expr, Pow):
        return _evaluate(expr.base, order) ** expr.exponent
    if isinstance(expr, Sqrt):
        return _evaluate(expr.arg, order).sqrt()
    if isinstance(expr, Cgf):
        inner = _evaluate(expr.arg, order)
        return PowerSeries.catalan(inner.order).compose(inner)
    raise TypeError(f"unknown expression node {expr!r}")


def expand(expr: SeriesExpr, order: int, _max_slack: int = 256) -> PowerSeries:
    """Expand a parsed expression to exact coefficients 0..order.

    Removable-factor divisions (e.g. dividing by 2x when the numerator has a
    vanishing constant term) lose known coefficients, so evaluation runs at a
    padded working order and retries with more slack if needed.
    """
    slack = 4
    while True:
        result = _evaluate(expr, order + slack)
        if result.order >= order:
            return result.truncate(order)
        if slack >= _max_slack:
            raise SeriesError(
                f"could not reach order {order}; expression loses too many "
                "coefficients to removable factors"
            )
        slack *= 4


def expand_gf(text: str, order: int) -> PowerSeries:
    """Convenience: parse and expand in one step."""
    return expand(parse_gf(text), order)
