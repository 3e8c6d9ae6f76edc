# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Expression trees of one-variable real functions. Nodes are frozen dataclasses,
so trees are immutable, hashable and compared structurally.
"""
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional, Union

from weierstrass.constants import EULER_GAMMA


class UnaryOp(Enum):
    NEG = "neg"
    LN = "ln"
    LOG2 = "log2"
    EXP = "exp"
    SIN = "sin"
    COS = "cos"
    TAN = "tan"
    ARCTAN = "arctan"
    ARCSIN = "arcsin"
    GAMMA = "gamma"
    LNGAMMA = "lngamma"


class BinaryOp(Enum):
    ADD = "+"
    SUB = "-"
    MUL = "*"
    DIV = "/"
    POW = "^"


FUNCTIONS = {op.value: op for op in UnaryOp if op != UnaryOp.NEG}

NAMED_CONSTANTS = {
    "pi": math.pi,
    "e": math.e,
    "euler_gamma": EULER_GAMMA,
}

VARIABLE_NAME = "x"

PRECEDENCE = {
    BinaryOp.ADD: 1,
    BinaryOp.SUB: 1,
    BinaryOp.MUL: 2,
    BinaryOp.DIV: 2,
    BinaryOp.POW: 4,
}
NEG_PRECEDENCE = 3
ATOM_PRECEDENCE = 5
RIGHT_ASSOCIATIVE = {BinaryOp.POW}


@dataclass(frozen=True)
class Constant:
    value: float

    def __post_init__(self):
        object.__setattr__(self, 'value', float(self.value))
        if not math.isfinite(self.value):
            raise ValueError(f"Constant must be finite, was {self.value}")


@dataclass(frozen=True)
class NamedConstant:
    name: str

    def __post_init__(self):
        if self.name not in NAMED_CONSTANTS:
            raise ValueError(f"Unknown named constant {self.name}")

    @property
    def value(self) -> float:
        return NAMED_CONSTANTS[self.name]


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Unary:
    op: UnaryOp
    child: 'Expression'


@dataclass(frozen=True)
class Binary:
    op: BinaryOp
    left: 'Expression'
    right: 'Expression'


Expression = Union[Constant, NamedConstant, Variable, Unary, Binary]


@lru_cache(maxsize=4096)
def contains_variable(expr: Expression) -> bool:
    if isinstance(expr, Variable):
        return True
    if isinstance(expr, Unary):
        return contains_variable(expr.child)
    if isinstance(expr, Binary):
        return contains_variable(expr.left) or contains_variable(expr.right)
    return False


def substitute(outer: Expression, inner: Expression) -> Expression:
    """outer with every occurrence of x replaced by inner, i.e. the composition outer o inner"""
    if isinstance(outer, Variable):
        return inner
    if isinstance(outer, Unary):
        return Unary(outer.op, substitute(outer.child, inner))
    if isinstance(outer, Binary):
        return Binary(outer.op, substitute(outer.left, inner), substitute(outer.right, inner))
    return outer


def gamma_a_expression(a: float) -> Expression:
    """Gamma(a x) / Gamma(a) as an expression"""
    if not a > 0:
        raise ValueError(f"parameter a must be positive, was {a}")
    return Binary(BinaryOp.DIV,
                  Unary(UnaryOp.GAMMA, Binary(BinaryOp.MUL, Constant(a), Variable())),
                  Unary(UnaryOp.GAMMA, Constant(a)))


def integer_exponent(expr: Expression):
    """The exponent as an int if it is an integer literal (possibly negated), else None"""
    if isinstance(expr, Constant) and expr.value.is_integer() and abs(expr.value) <= 1024:
        return int(expr.value)
    if isinstance(expr, Unary) and expr.op == UnaryOp.NEG:
        n = integer_exponent(expr.child)
        return -n if n is not None else None
    return None


def _constant_value(expr: Expression):
    if isinstance(expr, (Constant, NamedConstant)):
        return expr.value
    return None


def gamma_slice_parameter(expr: Expression) -> Optional[float]:
    """a if expr has the shape Gamma(a x) / Gamma(a) (or Gamma(x a) / Gamma(a)), else None"""
    if not (isinstance(expr, Binary) and expr.op == BinaryOp.DIV):
        return None
    top, bottom = expr.left, expr.right
    if not (isinstance(top, Unary) and top.op == UnaryOp.GAMMA
            and isinstance(bottom, Unary) and bottom.op == UnaryOp.GAMMA):
        return None
    a = _constant_value(bottom.child)
    product = top.child
    if a is None or not a > 0 or not (isinstance(product, Binary) and product.op == BinaryOp.MUL):
        return None
    if isinstance(product.right, Variable) and _constant_value(product.left) == a:
        return a
    if isinstance(product.left, Variable) and _constant_value(product.right) == a:
        return a
    return None
