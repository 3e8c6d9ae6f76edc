# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from dataclasses import dataclass
from typing import Union

from weierstrass.interval.interval import Interval, square

Scalar = Union[float, Interval]


def _sq(v: Scalar) -> Scalar:
    if isinstance(v, Interval):
        return square(v)
    return v * v


@dataclass(frozen=True)
class Jet2:
    """
    Value, first and second derivative of a function at a point (floats) or over
    an interval (Intervals), propagated by the exact sum, product, quotient and
    chain rules.
    """
    v: Scalar
    d1: Scalar
    d2: Scalar

    @classmethod
    def variable(cls, x: Scalar) -> 'Jet2':
        if isinstance(x, Interval):
            return cls(x, Interval.point(1.0), Interval.point(0.0))
        return cls(x, 1.0, 0.0)

    @classmethod
    def constant(cls, c: Scalar) -> 'Jet2':
        if isinstance(c, Interval):
            return cls(c, Interval.point(0.0), Interval.point(0.0))
        return cls(c, 0.0, 0.0)

    def as_tuple(self) -> tuple:
        return self.v, self.d1, self.d2

    def __add__(self, other: 'Jet2') -> 'Jet2':
        return Jet2(self.v + other.v, self.d1 + other.d1, self.d2 + other.d2)

    def __sub__(self, other: 'Jet2') -> 'Jet2':
        return Jet2(self.v - other.v, self.d1 - other.d1, self.d2 - other.d2)

    def __neg__(self) -> 'Jet2':
        return Jet2(-self.v, -self.d1, -self.d2)

    def __mul__(self, other: 'Jet2') -> 'Jet2':
        return Jet2(
            self.v * other.v,
            self.d1 * other.v + self.v * other.d1,
            self.d2 * other.v + 2.0 * (self.d1 * other.d1) + self.v * other.d2)

    def __truediv__(self, other: 'Jet2') -> 'Jet2':
        q = self.v / other.v
        q1 = (self.d1 - q * other.d1) / other.v
        q2 = (self.d2 - 2.0 * (q1 * other.d1) - q * other.d2) / other.v
        return Jet2(q, q1, q2)

    def scale(self, c: Scalar) -> 'Jet2':
        """Multiply by a constant (tighter than a product of jets)"""
        return Jet2(self.v * c, self.d1 * c, self.d2 * c)

    def shift(self, c: Scalar) -> 'Jet2':
        """Add a constant"""
        return Jet2(self.v + c, self.d1, self.d2)

    def chain(self, f0: Scalar, f1: Scalar, f2: Scalar) -> 'Jet2':
        """
        Apply a univariate function phi given phi(v), phi'(v) and phi''(v):
        (phi o u)' = phi'(u) u' and (phi o u)'' = phi''(u) u'^2 + phi'(u) u''.
        """
        return Jet2(f0, f1 * self.d1, f2 * _sq(self.d1) + f1 * self.d2)


@dataclass(frozen=True)
class Jet3:
    """
    As Jet2 with the third derivative as well. The sign certificates use it for
    mean-value forms of quantities built from f, f' and f''.
    """
    v: Scalar
    d1: Scalar
    d2: Scalar
    d3: Scalar

    @classmethod
    def variable(cls, x: Scalar) -> 'Jet3':
        if isinstance(x, Interval):
            return cls(x, Interval.point(1.0), Interval.point(0.0), Interval.point(0.0))
        return cls(x, 1.0, 0.0, 0.0)

    @classmethod
    def constant(cls, c: Scalar) -> 'Jet3':
        if isinstance(c, Interval):
            zero = Interval.point(0.0)
            return cls(c, zero, zero, zero)
        return cls(c, 0.0, 0.0, 0.0)

    def as_tuple(self) -> tuple:
        return self.v, self.d1, self.d2, self.d3

    def __add__(self, other: 'Jet3') -> 'Jet3':
        return Jet3(self.v + other.v, self.d1 + other.d1, self.d2 + other.d2, self.d3 + other.d3)

    def __sub__(self, other: 'Jet3') -> 'Jet3':
        return Jet3(self.v - other.v, self.d1 - other.d1, self.d2 - other.d2, self.d3 - other.d3)

    def __neg__(self) -> 'Jet3':
        return Jet3(-self.v, -self.d1, -self.d2, -self.d3)

    def __mul__(self, other: 'Jet3') -> 'Jet3':
        return Jet3(
            self.v * other.v,
            self.d1 * other.v + self.v * other.d1,
            self.d2 * other.v + 2.0 * (self.d1 * other.d1) + self.v * other.d2,
            self.d3 * other.v + 3.0 * (self.d2 * other.d1) + 3.0 * (self.d1 * other.d2) + self.v * other.d3)

    def __truediv__(self, other: 'Jet3') -> 'Jet3':
        q = self.v / other.v
        q1 = (self.d1 - q * other.d1) / other.v
        q2 = (self.d2 - 2.0 * (q1 * other.d1) - q * other.d2) / other.v
        q3 = (self.d3 - 3.0 * (q2 * other.d1) - 3.0 * (q1 * other.d2) - q * other.d3) / other.v
        return Jet3(q, q1, q2, q3)

    def scale(self, c: Scalar) -> 'Jet3':
        return Jet3(self.v * c, self.d1 * c, self.d2 * c, self.d3 * c)

    def shift(self, c: Scalar) -> 'Jet3':
        return Jet3(self.v + c, self.d1, self.d2, self.d3)

    def chain(self, f0: Scalar, f1: Scalar, f2: Scalar, f3: Scalar) -> 'Jet3':
        """(phi o u)''' = phi'''(u) u'^3 + 3 phi''(u) u' u'' + phi'(u) u'''"""
        d1sq = _sq(self.d1)
        return Jet3(
            f0,
            f1 * self.d1,
            f2 * d1sq + f1 * self.d2,
            f3 * (d1sq * self.d1) + 3.0 * (f2 * (self.d1 * self.d2)) + f1 * self.d3)
