# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Evaluation of expressions at a point, over an interval, as second-order jets
(value, f', f'') in both flavours, and vectorised over numpy arrays.

Point and interval evaluation share one tree walk; they differ only in the
backend of scalar functions used. Domain violations raise DomainError naming
the innermost failing sub-expression.
"""
import math
from dataclasses import dataclass
from typing import Callable, Union

import numpy as np
from scipy import special as sp

from weierstrass.constants import EULER_GAMMA
from weierstrass.errors import DomainError
from weierstrass.expr.nodes import Expression, Constant, NamedConstant, Variable, Unary, Binary, \
    UnaryOp, BinaryOp, contains_variable, integer_exponent
from weierstrass.expr.printer import to_text
from weierstrass.interval import interval as iv
from weierstrass.interval.interval import Interval
from weierstrass.interval.jet import Jet2, Jet3
from weierstrass.special.gamma import gamma, lngamma, digamma, trigamma, tetragamma
from weierstrass.special.interval_gamma import gamma_interval, lngamma_interval, digamma_interval, \
    trigamma_interval, tetragamma_interval

Scalar = Union[float, Interval]
Jet = Union[Jet2, Jet3]


@dataclass(frozen=True)
class _Backend:
    constant: Callable
    named: Callable
    check: Callable
    ln: Callable
    log2: Callable
    exp: Callable
    sin: Callable
    cos: Callable
    tan: Callable
    arctan: Callable
    arcsin: Callable
    sqrt: Callable
    gamma: Callable
    lngamma: Callable
    digamma: Callable
    trigamma: Callable
    tetragamma: Callable
    square: Callable
    pow_int: Callable
    pow: Callable
    inv_ln2: Scalar


def _point_check(v: float) -> float:
    if not math.isfinite(v):
        raise DomainError("non-finite result", value=v)
    return v


def _point_ln(v: float) -> float:
    if v <= 0.0:
        raise DomainError("ln requires a positive argument", value=v)
    return math.log(v)


def _point_log2(v: float) -> float:
    if v <= 0.0:
        raise DomainError("log2 requires a positive argument", value=v)
    return math.log2(v)


def _point_exp(v: float) -> float:
    try:
        return math.exp(v)
    except OverflowError:
        raise DomainError("exp overflows", value=v)


def _point_arcsin(v: float) -> float:
    if not -1.0 <= v <= 1.0:
        raise DomainError("arcsin requires an argument in [-1, 1]", value=v)
    return math.asin(v)


def _point_sqrt(v: float) -> float:
    if v < 0.0:
        raise DomainError("sqrt requires a non-negative argument", value=v)
    return math.sqrt(v)


def _point_pow_int(v: float, n: int) -> float:
    if n < 0 and v == 0.0:
        raise DomainError(f"negative power {n} of 0", value=v)
    try:
        return v ** n
    except OverflowError:
        raise DomainError(f"power {n} overflows", value=v)


def _point_pow(v: float, w: float) -> float:
    if v <= 0.0:
        raise DomainError("non-integer power requires a positive base", value=v)
    try:
        return math.pow(v, w)
    except OverflowError:
        raise DomainError("power overflows", value=(v, w))


_POINT = _Backend(
    constant=float,
    named=lambda name: {"pi": math.pi, "e": math.e, "euler_gamma": EULER_GAMMA}[name],
    check=_point_check,
    ln=_point_ln,
    log2=_point_log2,
    exp=_point_exp,
    sin=math.sin,
    cos=math.cos,
    tan=math.tan,
    arctan=math.atan,
    arcsin=_point_arcsin,
    sqrt=_point_sqrt,
    gamma=gamma,
    lngamma=lngamma,
    digamma=digamma,
    trigamma=trigamma,
    tetragamma=tetragamma,
    square=lambda v: v * v,
    pow_int=_point_pow_int,
    pow=_point_pow,
    inv_ln2=1.0 / math.log(2.0),
)

_INTERVAL = _Backend(
    constant=Interval.point,
    named=lambda name: {"pi": iv.PI, "e": iv.E, "euler_gamma": Interval.around(EULER_GAMMA)}[name],
    check=lambda v: v,
    ln=iv.ln,
    log2=iv.log2,
    exp=iv.exp,
    sin=iv.sin,
    cos=iv.cos,
    tan=iv.tan,
    arctan=iv.arctan,
    arcsin=iv.arcsin,
    sqrt=iv.sqrt,
    gamma=gamma_interval,
    lngamma=lngamma_interval,
    digamma=digamma_interval,
    trigamma=trigamma_interval,
    tetragamma=tetragamma_interval,
    square=iv.square,
    pow_int=iv.pow_int,
    pow=iv.pow,
    inv_ln2=1.0 / iv.LN2,
)


def _unary_value(op: UnaryOp, b: _Backend, v: Scalar) -> Scalar:
    if op == UnaryOp.NEG:
        return -v
    return getattr(b, _UNARY_FUNCTION[op])(v)


_UNARY_FUNCTION = {
    UnaryOp.LN: "ln",
    UnaryOp.LOG2: "log2",
    UnaryOp.EXP: "exp",
    UnaryOp.SIN: "sin",
    UnaryOp.COS: "cos",
    UnaryOp.TAN: "tan",
    UnaryOp.ARCTAN: "arctan",
    UnaryOp.ARCSIN: "arcsin",
    UnaryOp.GAMMA: "gamma",
    UnaryOp.LNGAMMA: "lngamma",
}


def _binary_value(expr: Binary, b: _Backend, left: Scalar, right: Scalar) -> Scalar:
    op = expr.op
    if op == BinaryOp.ADD:
        return left + right
    if op == BinaryOp.SUB:
        return left - right
    if op == BinaryOp.MUL:
        return left * right
    if op == BinaryOp.DIV:
        return left / right
    n = integer_exponent(expr.right)
    if n is not None:
        return b.pow_int(left, n)
    return b.pow(left, right)


def _wrap_errors(expr: Expression, fn):
    try:
        return fn()
    except DomainError as e:
        raise e.with_node(to_text(expr))
    except (ArithmeticError, ValueError) as e:
        raise DomainError(str(e) or type(e).__name__, node=to_text(expr))


def _value(expr: Expression, x: Scalar, b: _Backend) -> Scalar:
    if isinstance(expr, Variable):
        return x
    if isinstance(expr, Constant):
        return b.constant(expr.value)
    if isinstance(expr, NamedConstant):
        return b.named(expr.name)
    if isinstance(expr, Unary):
        v = _value(expr.child, x, b)
        return _wrap_errors(expr, lambda: b.check(_unary_value(expr.op, b, v)))
    left = _value(expr.left, x, b)
    right = _value(expr.right, x, b)
    return _wrap_errors(expr, lambda: b.check(_binary_value(expr, b, left, right)))


def _derivatives(op: UnaryOp, b: _Backend, v: Scalar, order: int) -> tuple:
    """phi(v), phi'(v), phi''(v) and, for order 3, phi'''(v) for the function phi of a unary node"""
    if op == UnaryOp.LN or op == UnaryOp.LOG2:
        inv = 1.0 / v
        ders = [b.ln(v), inv, -b.square(inv)]
        if order == 3:
            ders.append(2.0 * b.pow_int(inv, 3))
        if op == UnaryOp.LOG2:
            ders = [b.log2(v)] + [d * b.inv_ln2 for d in ders[1:]]
        return tuple(ders)
    if op == UnaryOp.EXP:
        e = b.exp(v)
        return (e,) * (order + 1)
    if op == UnaryOp.SIN or op == UnaryOp.COS:
        s, c = b.sin(v), b.cos(v)
        # the cycle sin, cos, -sin, -cos
        cycle = (s, c, -s, -c) if op == UnaryOp.SIN else (c, -s, -c, s)
        return cycle[:order + 1]
    if op == UnaryOp.TAN:
        t = b.tan(v)
        sec2 = b.square(t) + 1.0
        ders = (t, sec2, 2.0 * t * sec2)
        if order == 3:
            ders += (2.0 * sec2 * (sec2 + 2.0 * b.square(t)),)
        return ders
    if op == UnaryOp.ARCTAN:
        d = b.square(v) + 1.0
        ders = (b.arctan(v), 1.0 / d, -2.0 * v / b.square(d))
        if order == 3:
            ders += ((6.0 * b.square(v) - 2.0) / b.pow_int(d, 3),)
        return ders
    if op == UnaryOp.ARCSIN:
        w = 1.0 - b.square(v)
        r = b.sqrt(w)
        ders = (b.arcsin(v), 1.0 / r, v / (w * r))
        if order == 3:
            ders += ((1.0 + 2.0 * b.square(v)) / (b.square(w) * r),)
        return ders
    if op == UnaryOp.GAMMA:
        g = b.gamma(v)
        p = b.digamma(v)
        p1 = b.trigamma(v)
        ders = (g, g * p, g * (b.square(p) + p1))
        if order == 3:
            ders += (g * (b.pow_int(p, 3) + 3.0 * (p * p1) + b.tetragamma(v)),)
        return ders
    if op == UnaryOp.LNGAMMA:
        ders = (b.lngamma(v), b.digamma(v), b.trigamma(v))
        if order == 3:
            ders += (b.tetragamma(v),)
        return ders
    raise ValueError(f"Unknown unary op {op}")


def _order(u: Jet) -> int:
    return 3 if isinstance(u, Jet3) else 2


def _unary_jet(op: UnaryOp, b: _Backend, u: Jet) -> Jet:
    if op == UnaryOp.NEG:
        return -u
    return u.chain(*_derivatives(op, b, u.v, _order(u)))


def _falling(n: float, k: int) -> float:
    """n (n - 1) ... (n - k + 1)"""
    result = 1.0
    for i in range(k):
        result *= n - i
    return result


def _power_jet(b: _Backend, u: Jet, n, power) -> Jet:
    """u^n given power(v, m) for the exponents m = n, n - 1, ..."""
    ders = [power(u.v, n)]
    for k in range(1, _order(u) + 1):
        c = _falling(n, k)
        ders.append(c * power(u.v, n - k) if c != 0.0 else b.constant(0.0))
    return u.chain(*ders)


def _binary_jet(expr: Binary, b: _Backend, left: Jet, right: Jet) -> Jet:
    op = expr.op
    left_const = not contains_variable(expr.left)
    right_const = not contains_variable(expr.right)
    if op == BinaryOp.ADD:
        if right_const:
            return left.shift(right.v)
        if left_const:
            return right.shift(left.v)
        return left + right
    if op == BinaryOp.SUB:
        if right_const:
            return left.shift(-right.v)
        if left_const:
            return (-right).shift(left.v)
        return left - right
    if op == BinaryOp.MUL:
        if right_const:
            return left.scale(right.v)
        if left_const:
            return right.scale(left.v)
        return left * right
    if op == BinaryOp.DIV:
        if right_const:
            c = right.v
            return type(left)(*[component / c for component in left.as_tuple()])
        return left / right

    n = integer_exponent(expr.right)
    if n is not None:
        if n == 0:
            return type(left).constant(b.constant(1.0))
        return _power_jet(b, left, n, b.pow_int)
    if right_const:
        return _power_jet(b, left, right.v, b.pow)
    # f^g = exp(g ln f)
    ln_left = _unary_jet(UnaryOp.LN, b, left)
    return _unary_jet(UnaryOp.EXP, b, right * ln_left)


def _check_jet(b: _Backend, jet: Jet) -> Jet:
    for component in jet.as_tuple():
        b.check(component)
    return jet


def _jet(expr: Expression, x: Jet, b: _Backend) -> Jet:
    if isinstance(expr, Variable):
        return x
    if not contains_variable(expr):
        return type(x).constant(_value(expr, x.v, b))
    if isinstance(expr, Unary):
        u = _jet(expr.child, x, b)
        return _wrap_errors(expr, lambda: _check_jet(b, _unary_jet(expr.op, b, u)))
    left = _jet(expr.left, x, b)
    right = _jet(expr.right, x, b)
    return _wrap_errors(expr, lambda: _check_jet(b, _binary_jet(expr, b, left, right)))


def _point_arg(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("argument must be finite", value=x)
    return x


def eval_point(f: Expression, x: float) -> float:
    return _value(f, _point_arg(x), _POINT)


def eval_jet2(f: Expression, x: float) -> Jet2:
    """(f(x), f'(x), f''(x)) by forward-mode propagation"""
    return _jet(f, Jet2.variable(_point_arg(x)), _POINT)


def eval_interval(f: Expression, x: Interval) -> Interval:
    """An enclosure of the range of f over x"""
    return _value(f, x, _INTERVAL)


def eval_jet2_interval(f: Expression, x: Interval) -> Jet2:
    """Enclosures of the ranges of f, f' and f'' over x"""
    return _jet(f, Jet2.variable(x), _INTERVAL)


def eval_jet3(f: Expression, x: float) -> Jet3:
    return _jet(f, Jet3.variable(_point_arg(x)), _POINT)


def eval_jet3_interval(f: Expression, x: Interval) -> Jet3:
    """Enclosures of the ranges of f and its first three derivatives over x"""
    return _jet(f, Jet3.variable(x), _INTERVAL)


def _array_unary(op: UnaryOp, v: np.ndarray) -> np.ndarray:
    if op == UnaryOp.NEG:
        return -v
    if op == UnaryOp.LN:
        return np.log(v)
    if op == UnaryOp.LOG2:
        return np.log2(v)
    if op == UnaryOp.EXP:
        return np.exp(v)
    if op == UnaryOp.SIN:
        return np.sin(v)
    if op == UnaryOp.COS:
        return np.cos(v)
    if op == UnaryOp.TAN:
        return np.tan(v)
    if op == UnaryOp.ARCTAN:
        return np.arctan(v)
    if op == UnaryOp.ARCSIN:
        return np.arcsin(v)
    if op == UnaryOp.GAMMA:
        return np.where(v > 0, sp.gamma(np.where(v > 0, v, 1.0)), np.nan)
    if op == UnaryOp.LNGAMMA:
        return np.where(v > 0, sp.gammaln(np.where(v > 0, v, 1.0)), np.nan)
    raise ValueError(f"Unknown unary op {op}")


def _array(expr: Expression, xs: np.ndarray) -> np.ndarray:
    if isinstance(expr, Variable):
        return xs
    if isinstance(expr, (Constant, NamedConstant)):
        return np.full(xs.shape, expr.value)
    if isinstance(expr, Unary):
        r = _array_unary(expr.op, _array(expr.child, xs))
    else:
        left = _array(expr.left, xs)
        right = _array(expr.right, xs)
        op = expr.op
        if op == BinaryOp.ADD:
            r = left + right
        elif op == BinaryOp.SUB:
            r = left - right
        elif op == BinaryOp.MUL:
            r = left * right
        elif op == BinaryOp.DIV:
            r = left / right
        elif integer_exponent(expr.right) is not None:
            r = np.power(left, float(integer_exponent(expr.right)))
        else:
            r = np.where(left > 0, np.power(np.where(left > 0, left, 1.0), right), np.nan)
    return np.where(np.isfinite(r), r, np.nan)


def eval_array(f: Expression, xs) -> np.ndarray:
    """
    f evaluated elementwise over an array. Points outside the natural domain
    of any sub-expression come out as NaN.
    """
    xs = np.asarray(xs, dtype=np.float64)
    with np.errstate(all="ignore"):
        return _array(f, xs)
