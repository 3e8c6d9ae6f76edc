# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
The derivative quantities whose signs the criteria certify. Each accepts a
float (point value) or an Interval (enclosure over it).

Every quantity q has a companion `*_slope_of` giving an enclosure of dq/dx,
which the sign certificates use for mean-value and monotonicity forms. The
slopes need third derivatives, so interval jets are third order.
"""
from functools import lru_cache
from typing import Union, Optional

from weierstrass.errors import DomainError
from weierstrass.expr.evaluate import eval_jet2, eval_jet3, eval_jet3_interval, eval_interval
from weierstrass.expr.nodes import Expression
from weierstrass.interval.interval import Interval, square
from weierstrass.interval.jet import Jet3

Scalar = Union[float, Interval]


class JetCache:
    """Memoised interval jets and values of one expression"""

    def __init__(self, f: Expression, maxsize: int = 1 << 16):
        self.f = f
        self.jet = lru_cache(maxsize=maxsize)(self._jet)
        self.value = lru_cache(maxsize=maxsize)(self._value)

    def _jet(self, x: Interval) -> Jet3:
        return eval_jet3_interval(self.f, x)

    def _value(self, x: Interval) -> Interval:
        return eval_interval(self.f, x)


def _jet(f: Expression, x: Scalar, jets: Optional[JetCache]):
    if isinstance(x, Interval):
        return jets.jet(x) if jets is not None else eval_jet3_interval(f, x)
    return eval_jet2(f, x)


def _jet3(f: Expression, x: Scalar, jets: Optional[JetCache]) -> Jet3:
    if isinstance(x, Interval):
        return jets.jet(x) if jets is not None else eval_jet3_interval(f, x)
    return eval_jet3(f, x)


def _sq(v: Scalar) -> Scalar:
    return square(v) if isinstance(v, Interval) else v * v


def _check_positive(x: Scalar):
    lo = x.lo if isinstance(x, Interval) else x
    if lo <= 0.0:
        raise DomainError("the criteria need x > 0", value=x)


def h_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    """x f'(x)"""
    return x * _jet(f, x, jets).d1


def g_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    """
    f'(x)/x + f''(x), the derivative of x f'(x) divided by x. Non-negative on
    J exactly when x f'(x) is non-decreasing there.
    """
    _check_positive(x)
    jet = _jet(f, x, jets)
    return jet.d1 / x + jet.d2


def g_slope_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    _check_positive(x)
    jet = _jet3(f, x, jets)
    return jet.d2 / x - jet.d1 / _sq(x) + jet.d3


def logconvex_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    """f'' f - f'^2; non-negative where ln f is convex"""
    jet = _jet(f, x, jets)
    return jet.d2 * jet.v - _sq(jet.d1)


def logconvex_slope_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    jet = _jet3(f, x, jets)
    return jet.d3 * jet.v - jet.d1 * jet.d2


def xf_derivative_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    """(x f(x))' = f + x f'"""
    jet = _jet(f, x, jets)
    return jet.v + x * jet.d1


def xf_derivative_slope_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    jet = _jet3(f, x, jets)
    return 2.0 * jet.d1 + x * jet.d2


def value_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    return _jet(f, x, jets).v


def derivative_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    return _jet(f, x, jets).d1


def second_derivative_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    return _jet(f, x, jets).d2


def third_derivative_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    return _jet3(f, x, jets).d3


def loglog_concavity_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    """
    x f'^2 - f (f' + x f''). Non-negative on J exactly when u -> ln f(e^u) is
    concave there, which makes f submultiplicative on J when f(1) = 1.
    """
    _check_positive(x)
    jet = _jet(f, x, jets)
    return x * _sq(jet.d1) - jet.v * (jet.d1 + x * jet.d2)


def loglog_concavity_slope_of(f: Expression, x: Scalar, jets: JetCache = None) -> Scalar:
    _check_positive(x)
    jet = _jet3(f, x, jets)
    return x * (jet.d1 * jet.d2) - 2.0 * (jet.v * jet.d2) - x * (jet.v * jet.d3)
