"""Expression language for input classes ``f``.

Grammar, loosest binding first::

    sum     := product (('+' | '-') product)*
    product := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' power)?          # right-associative, integer exponents
    atom    := NUMBER | xN | s[i](B) | c[i](B) | c1(B) | schur[l1,...](x) | '(' sum ')'

Numbers are integers or rationals written ``p/q`` without spaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from gysin.core.coeffring import ClassPoly, chern_from_segre
from gysin.core.config import settings
from gysin.core.exceptions import ExpressionSyntaxError, VariableRangeError
from gysin.core.tpoly import TPoly, schur_in_t


# AST

@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Sym:
    kind: str  # "s" or "c"
    index: int
    bundle: str


@dataclass(frozen=True)
class Schur:
    parts: Tuple[int, ...]


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
    exponent: "Expr"


Expr = Union[Num, Var, Sym, Schur, Neg, BinOp, Pow]


# Tokens

@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, OP, EOF
    text: str
    column: int


TOKEN_RE = re.compile(r"\s*(?:(?P<NUM>\d+(?:/\d+)?)|(?P<IDENT>[A-Za-z_][A-Za-z0-9_]*)|(?P<OP>[-+*^()\[\],]))")


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    pos = 0
    while pos < len(source):
        if source[pos:].strip() == "":
            pos = len(source)
            break
        match = TOKEN_RE.match(source, pos)
        if not match:
            column = pos + 1 + (len(source[pos:]) - len(source[pos:].lstrip()))
            raise ExpressionSyntaxError(f"unexpected character {source[column - 1]!r}", column)
        kind = match.lastgroup
        text = match.group(kind)
        tokens.append(Token(kind, text, match.start(kind) + 1))
        pos = match.end()
    tokens.append(Token("EOF", "", len(source) + 1))
    return tokens


VARIABLE_RE = re.compile(r"x(\d+)$")


class Parser:
    def __init__(self, source: str, d: Optional[int] = None):
        self.source = source
        self.d = d
        self.tokens = tokenize(source)
        self.pos = 0

    # Token stream

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.tokens[self.pos]
        if token.kind != "EOF":
            self.pos += 1
        return token

    def at(self, text: str) -> bool:
        token = self.peek()
        return token.kind == "OP" and token.text == text

    def expect(self, text: str, what: Optional[str] = None) -> Token:
        token = self.peek()
        if token.kind == "OP" and token.text == text:
            return self.advance()
        if text == ")" and what is None and token.kind == "EOF":
            raise ExpressionSyntaxError("unbalanced parenthesis", token.column, {"')'"})
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        raise ExpressionSyntaxError(f"unexpected {found}", token.column, {what or repr(text)})

    def expect_integer(self) -> int:
        token = self.peek()
        if token.kind != "NUM" or "/" in token.text:
            found = "end of input" if token.kind == "EOF" else repr(token.text)
            raise ExpressionSyntaxError(f"unexpected {found}", token.column, {"integer"})
        self.advance()
        return int(token.text)

    def expect_bundle(self) -> str:
        token = self.peek()
        if token.kind != "IDENT":
            found = "end of input" if token.kind == "EOF" else repr(token.text)
            raise ExpressionSyntaxError(f"unexpected {found}", token.column, {"bundle name"})
        self.advance()
        return token.text

    # Grammar

    def parse(self) -> Expr:
        expr = self.parse_sum()
        token = self.peek()
        if token.kind != "EOF":
            if token.kind == "OP" and token.text == ")":
                raise ExpressionSyntaxError("unbalanced parenthesis", token.column)
            raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.column,
                                        {"'+'", "'-'", "'*'", "'^'", "end of input"})
        return expr

    def parse_sum(self) -> Expr:
        left = self.parse_product()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            left = BinOp(op, left, self.parse_product())
        return left

    def parse_product(self) -> Expr:
        left = self.parse_unary()
        while self.at("*"):
            self.advance()
            left = BinOp("*", left, self.parse_unary())
        return left

    def parse_unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.at("^"):
            self.advance()
            token = self.peek()
            exponent = self.parse_power()
            value = _constant_integer(exponent)
            if value is None:
                raise ExpressionSyntaxError("exponent must be a non-negative integer", token.column,
                                            {"integer"})
            if value > settings.max_exponent:
                raise ExpressionSyntaxError(
                    f"exponent exceeds the limit of {settings.max_exponent}",
                    token.column, {f"exponent <= {settings.max_exponent}"},
                )
            return Pow(base, exponent)
        return base

    def parse_atom(self) -> Expr:
        token = self.peek()
        if token.kind == "NUM":
            self.advance()
            _, _, denominator = token.text.partition("/")
            if denominator and int(denominator) == 0:
                raise ExpressionSyntaxError("zero denominator", token.column,
                                            {"non-zero denominator"})
            return Num(Fraction(token.text))
        if token.kind == "OP" and token.text == "(":
            self.advance()
            inner = self.parse_sum()
            self.expect(")")
            return inner
        if token.kind == "IDENT":
            return self.parse_identifier()
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        raise ExpressionSyntaxError(f"unexpected {found}", token.column,
                                    {"number", "variable", "symbol", "'('", "'-'"})

    def parse_identifier(self) -> Expr:
        token = self.advance()
        name = token.text
        variable = VARIABLE_RE.match(name)
        if variable:
            index = int(variable.group(1))
            if index < 1 or (self.d is not None and index > self.d):
                allowed = f"x1..x{self.d}" if self.d is not None else "x1, x2, ..."
                raise VariableRangeError(
                    f"variable {name} at column {token.column} is outside {allowed}"
                )
            return Var(index)
        if name in ("s", "c"):
            self.expect("[")
            index = self.expect_integer()
            self.expect("]")
            self.expect("(", "'(' and a bundle name")
            bundle = self.expect_bundle()
            self.expect(")", "')'")
            return Sym(name, index, bundle)
        if name == "c1":
            self.expect("(", "'(' and a bundle name")
            bundle = self.expect_bundle()
            self.expect(")", "')'")
            return Sym("c", 1, bundle)
        if name == "schur":
            self.expect("[")
            parts = [self.expect_integer()]
            while self.at(","):
                self.advance()
                parts.append(self.expect_integer())
            self.expect("]")
            self.expect("(", "'(x)'")
            arg = self.peek()
            if arg.kind != "IDENT" or arg.text != "x":
                raise ExpressionSyntaxError("schur takes the variable set x", arg.column, {"'x'"})
            self.advance()
            self.expect(")", "')'")
            if any(a < b for a, b in zip(parts, parts[1:])):
                raise ExpressionSyntaxError(f"schur index {parts} is not a partition", token.column)
            nonzero = tuple(p for p in parts if p)
            if self.d is not None and len(nonzero) > self.d:
                raise VariableRangeError(
                    f"schur[{','.join(map(str, parts))}] at column {token.column} needs more than {self.d} variables"
                )
            return Schur(tuple(parts))
        raise ExpressionSyntaxError(f"unknown name {name!r}", token.column,
                                    {"xN", "s[i](B)", "c[i](B)", "c1(B)", "schur[...](x)"})


def _constant_integer(expr: Expr) -> Optional[int]:
    """Value of a constant integer exponent, saturated just above ``max_exponent``."""
    cap = settings.max_exponent + 1
    if isinstance(expr, Num):
        return min(int(expr.value), cap) if expr.value.denominator == 1 else None
    if isinstance(expr, Pow):
        base = _constant_integer(expr.base)
        exponent = _constant_integer(expr.exponent)
        if base is None or exponent is None:
            return None
        if base > 1 and exponent >= cap.bit_length():
            return cap
        return min(base ** exponent, cap)
    return None


def parse_expression(text: str, d: Optional[int] = None) -> Expr:
    """Parse ``text``; variables must lie in ``x1..xd`` when ``d`` is given."""
    return Parser(text, d).parse()


# Printing

def to_text(expr: Expr) -> str:
    """Fully parenthesized text that parses back to ``expr``."""
    if isinstance(expr, Num):
        value = expr.value
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(expr, Var):
        return f"x{expr.index}"
    if isinstance(expr, Sym):
        return f"{expr.kind}[{expr.index}]({expr.bundle})"
    if isinstance(expr, Schur):
        return f"schur[{','.join(map(str, expr.parts))}](x)"
    if isinstance(expr, Neg):
        return f"(-{to_text(expr.operand)})"
    if isinstance(expr, BinOp):
        return f"({to_text(expr.left)} {expr.op} {to_text(expr.right)})"
    if isinstance(expr, Pow):
        return f"({to_text(expr.base)}^{to_text(expr.exponent)})"
    raise TypeError(f"not an expression node: {expr!r}")


# Lowering

def _symbol_value(sym: Sym) -> ClassPoly:
    if sym.kind == "s":
        return ClassPoly.segre(sym.bundle, sym.index)
    if sym.bundle == "L":
        # L is a line bundle: c(L) = 1 + c_1(L)
        return {0: ClassPoly.one(), 1: ClassPoly.c1("L")}.get(sym.index, ClassPoly.zero())
    return chern_from_segre(sym.bundle, sym.index)


def lower_expr(expr: Expr, d: int) -> TPoly:
    """Evaluate the syntax tree to a polynomial in ``t_1..t_d``."""
    if isinstance(expr, Num):
        return TPoly.constant(d, expr.value)
    if isinstance(expr, Var):
        if not 1 <= expr.index <= d:
            raise VariableRangeError(f"variable x{expr.index} is outside x1..x{d}")
        return TPoly.variable(d, expr.index)
    if isinstance(expr, Sym):
        return TPoly.constant(d, _symbol_value(expr))
    if isinstance(expr, Schur):
        return schur_in_t(expr.parts, d)
    if isinstance(expr, Neg):
        return -lower_expr(expr.operand, d)
    if isinstance(expr, BinOp):
        left, right = lower_expr(expr.left, d), lower_expr(expr.right, d)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        return left * right
    if isinstance(expr, Pow):
        return lower_expr(expr.base, d) ** _constant_integer(expr.exponent)
    raise TypeError(f"not an expression node: {expr!r}")


def parse_polynomial(text: str, d: int) -> TPoly:
    return lower_expr(parse_expression(text, d), d)
