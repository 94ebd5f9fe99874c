from __future__ import annotations

import dataclasses
import re
from typing import List, Mapping, Tuple, Union

from bnset.exceptions import ExpressionFormatError, MissingVariableError
from bnset.util import DECIMAL_PATTERN

TOKEN_PATTERN = re.compile(r"\(|\)|[^\s()]+")
SYMBOLS = ("+", "-", "*", "^")


@dataclasses.dataclass(frozen=True)
class Var:
    name: str


@dataclasses.dataclass(frozen=True)
class Const:
    value: int


@dataclasses.dataclass(frozen=True)
class Op:
    symbol: str
    args: Tuple[Expr, ...]


Expr = Union[Var, Const, Op]


def square(expr: Expr) -> Op:
    return Op("^", (expr, Const(2)))


def evaluate_expression(expr: Expr, env: Mapping[str, int]) -> int:
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, Var):
        if expr.name not in env:
            raise MissingVariableError(f"No value for variable {expr.name}")
        return env[expr.name]

    values = [evaluate_expression(arg, env) for arg in expr.args]
    if expr.symbol == "+":
        return sum(values)
    if expr.symbol == "-":
        left, right = values
        return left - right
    if expr.symbol == "*":
        result = 1
        for value in values:
            result *= value
        return result
    if expr.symbol == "^":
        base, exponent = values
        return int(base**exponent)
    raise ExpressionFormatError(f"Unknown operator: {expr.symbol}")


def parse_sexpr(text: str) -> Expr:
    tokens = TOKEN_PATTERN.findall(text)
    expr, position = _parse(tokens, 0)
    if position != len(tokens):
        raise ExpressionFormatError(f"Trailing tokens after expression: {' '.join(tokens[position:])}")
    return expr


def _parse(tokens: List[str], position: int) -> Tuple[Expr, int]:
    if position >= len(tokens):
        raise ExpressionFormatError("Unexpected end of expression")
    token = tokens[position]
    if token == ")":
        raise ExpressionFormatError("Unexpected ')'")
    if token != "(":
        if DECIMAL_PATTERN.fullmatch(token):
            return Const(int(token)), position + 1
        return Var(token), position + 1

    if position + 1 >= len(tokens) or tokens[position + 1] not in SYMBOLS:
        raise ExpressionFormatError(f"Expected an operator after '(' at token {position}")
    symbol = tokens[position + 1]
    position += 2
    args: List[Expr] = []
    while position < len(tokens) and tokens[position] != ")":
        arg, position = _parse(tokens, position)
        args.append(arg)
    if position >= len(tokens):
        raise ExpressionFormatError("Missing ')'")

    if (symbol in ("-", "^") and len(args) != 2) or (symbol in ("+", "*") and len(args) < 2):
        raise ExpressionFormatError(f"Wrong number of operands for '{symbol}': {len(args)}")
    if symbol == "^" and args[1] != Const(2):
        raise ExpressionFormatError("Only squares are supported")
    return Op(symbol, tuple(args)), position + 1
