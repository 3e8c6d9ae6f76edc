# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Interval enclosures of the gamma family built from the point functions plus a
certified relative error of GAMMA_REL_ERROR, using monotonicity: gamma and
lngamma decrease on (0, x_min] and increase on [x_min, inf); digamma and
tetragamma increase and trigamma decreases on (0, inf).
"""
from weierstrass.constants import GAMMA_REL_ERROR
from weierstrass.errors import DomainError
from weierstrass.interval.interval import Interval
from weierstrass.special.constants import minimum_point
from weierstrass.special.gamma import gamma, lngamma, digamma, trigamma, tetragamma

_REL = GAMMA_REL_ERROR


def _check(x: Interval, name: str):
    if x.lo <= 0.0:
        raise DomainError(f"{name} of an interval reaching 0 or below", node=name, value=x)


def _min_max(fn, x: Interval):
    x_min = minimum_point()
    if x.hi <= x_min:
        return fn(x.hi), fn(x.lo)
    if x.lo >= x_min:
        return fn(x.lo), fn(x.hi)
    return fn(x_min), max(fn(x.lo), fn(x.hi))


def gamma_interval(x: Interval) -> Interval:
    _check(x, "gamma")
    lo, hi = _min_max(gamma, x)
    return Interval(lo * (1.0 - _REL), hi * (1.0 + _REL))


def lngamma_interval(x: Interval) -> Interval:
    _check(x, "lngamma")
    lo, hi = _min_max(lngamma, x)
    return Interval(lo - _REL * (1.0 + abs(lo)), hi + _REL * (1.0 + abs(hi)))


def digamma_interval(x: Interval) -> Interval:
    _check(x, "digamma")
    lo, hi = digamma(x.lo), digamma(x.hi)
    return Interval(lo - _REL * (1.0 + abs(lo)), hi + _REL * (1.0 + abs(hi)))


def trigamma_interval(x: Interval) -> Interval:
    _check(x, "trigamma")
    return Interval(trigamma(x.hi) * (1.0 - _REL), trigamma(x.lo) * (1.0 + _REL))


def tetragamma_interval(x: Interval) -> Interval:
    _check(x, "tetragamma")
    return Interval(tetragamma(x.lo) * (1.0 + _REL), tetragamma(x.hi) * (1.0 - _REL))
