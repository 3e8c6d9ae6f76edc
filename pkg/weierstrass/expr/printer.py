# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.expr.nodes import Expression, Constant, NamedConstant, Variable, Unary, Binary, \
    UnaryOp, BinaryOp, VARIABLE_NAME, PRECEDENCE, NEG_PRECEDENCE, ATOM_PRECEDENCE, RIGHT_ASSOCIATIVE

_SPACED = {BinaryOp.ADD, BinaryOp.SUB}


def _number(value: float) -> str:
    if value.is_integer() and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def _precedence(expr: Expression) -> int:
    if isinstance(expr, Binary):
        return PRECEDENCE[expr.op]
    if isinstance(expr, Unary) and expr.op == UnaryOp.NEG:
        return NEG_PRECEDENCE
    if isinstance(expr, Constant) and expr.value < 0:
        return NEG_PRECEDENCE
    return ATOM_PRECEDENCE


def _wrap(expr: Expression, parens: bool) -> str:
    text = to_text(expr)
    return f"({text})" if parens else text


def to_text(expr: Expression) -> str:
    """
    Print an expression with the fewest parentheses that re-parse to the same tree.
    """
    if isinstance(expr, Variable):
        return VARIABLE_NAME
    if isinstance(expr, NamedConstant):
        return expr.name
    if isinstance(expr, Constant):
        return _number(expr.value)
    if isinstance(expr, Unary):
        if expr.op == UnaryOp.NEG:
            return "-" + _wrap(expr.child, _precedence(expr.child) < NEG_PRECEDENCE)
        return f"{expr.op.value}({to_text(expr.child)})"

    prec = PRECEDENCE[expr.op]
    right_assoc = expr.op in RIGHT_ASSOCIATIVE
    left_prec = _precedence(expr.left)
    right_prec = _precedence(expr.right)
    left = _wrap(expr.left, left_prec < prec or (left_prec == prec and right_assoc))
    right = _wrap(expr.right, right_prec < prec or (right_prec == prec and not right_assoc))
    op = f" {expr.op.value} " if expr.op in _SPACED else expr.op.value
    return f"{left}{op}{right}"
