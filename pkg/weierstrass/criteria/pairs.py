# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
The three two-variable inequalities and their enclosures over boxes X x Y.

Each is written as phi(x, y) >= 0:

  LEFT:               f(xy) - f(x) - f(y) + 1
  RIGHT:              f(x) + f(y) - 1 - f(xy)
  SUBMULTIPLICATIVE:  f(x) f(y) - f(xy)

All three are symmetric in x and y.
"""
from enum import Enum
from typing import Tuple

from weierstrass.criteria.derivatives import JetCache
from weierstrass.datatypes import Property
from weierstrass.interval.interval import Interval


class Side(Enum):
    LEFT = "left"
    RIGHT = "right"
    SUBMULTIPLICATIVE = "submultiplicative"


SIDE_OF = {
    Property.L_WEIERSTRASS: Side.LEFT,
    Property.R_WEIERSTRASS: Side.RIGHT,
    Property.SUBMULTIPLICATIVE: Side.SUBMULTIPLICATIVE,
}


def sides(side: Side, fx, fy, fxy) -> Tuple:
    """
    (lhs, rhs) of the inequality lhs <= rhs for f(x), f(y), f(xy) given as
    floats, numpy arrays or Intervals. phi = rhs - lhs.
    """
    if side == Side.LEFT:
        return fx + fy - 1.0, fxy
    if side == Side.RIGHT:
        return fxy, fx + fy - 1.0
    return fxy, fx * fy


def phi(side: Side, fx, fy, fxy):
    lhs, rhs = sides(side, fx, fy, fxy)
    return rhs - lhs


class PairForms:
    """
    Enclosures of phi for one expression, built on a JetCache so that repeated
    boxes sharing a side reuse the one-variable jets.
    """

    def __init__(self, side: Side, jets: JetCache):
        self.side = side
        self.jets = jets
        self.c1 = jets.value(Interval.point(1.0))

    def naive(self, x: Interval, y: Interval) -> Interval:
        return phi(self.side, self.jets.value(x), self.jets.value(y), self.jets.value(x * y))

    def on_unit_line(self, other: Interval) -> Interval:
        """phi(1, y) for y in `other`, using f(1 * y) = f(y)"""
        c1 = self.c1
        if self.side == Side.LEFT:
            return 1.0 - c1
        if self.side == Side.RIGHT:
            return c1 - 1.0
        return self.jets.value(other) * (c1 - 1.0)

    def face(self, x: Interval, y: Interval) -> Interval:
        if x.lo == x.hi == 1.0:
            return self.on_unit_line(y)
        if y.lo == y.hi == 1.0:
            return self.on_unit_line(x)
        return self.naive(x, y)

    def gradient(self, x: Interval, y: Interval) -> Tuple[Interval, Interval]:
        jx = self.jets.jet(x)
        jy = self.jets.jet(y)
        jxy = self.jets.jet(x * y)
        if self.side == Side.SUBMULTIPLICATIVE:
            return jx.d1 * jy.v - y * jxy.d1, jx.v * jy.d1 - x * jxy.d1
        gx = y * jxy.d1 - jx.d1
        gy = x * jxy.d1 - jy.d1
        if self.side == Side.RIGHT:
            return -gx, -gy
        return gx, gy

    def mean_value(self, x: Interval, y: Interval, gx: Interval, gy: Interval) -> Interval:
        xm, ym = Interval.point(x.mid()), Interval.point(y.mid())
        return self.face(xm, ym) + gx * (x - xm) + gy * (y - ym)

    def monotone(self, x: Interval, y: Interval, gx: Interval, gy: Interval):
        """
        The enclosure of phi on the face or corner where it is smallest, when
        a partial derivative has a definite sign over the box; None otherwise.
        """
        fx = _minimising_face(x, gx)
        fy = _minimising_face(y, gy)
        if fx is None and fy is None:
            return None
        return self.face(fx if fx is not None else x, fy if fy is not None else y)

    def mixed(self, x: Interval, y: Interval) -> Interval:
        """The mixed second derivative of phi over x, y"""
        jxy = self.jets.jet(x * y)
        xy = x * y
        if self.side == Side.SUBMULTIPLICATIVE:
            jx = self.jets.jet(x)
            jy = self.jets.jet(y)
            return jx.d1 * jy.d1 - jxy.d1 - xy * jxy.d2
        m = jxy.d1 + xy * jxy.d2
        return -m if self.side == Side.RIGHT else m

    def corner(self, x: Interval, y: Interval) -> Interval:
        """
        phi(x, y) = phi(x, 1) + phi(1, y) - phi(1, 1) + (x - 1)(y - 1) phi_xy(s, t)
        for some (s, t) between (1, 1) and (x, y).
        """
        c1 = self.c1
        if self.side == Side.LEFT:
            residual = 1.0 - c1
        elif self.side == Side.RIGHT:
            residual = c1 - 1.0
        else:
            residual = (c1 - 1.0) * (self.jets.value(x) + self.jets.value(y) - c1)
        return residual + (x - 1.0) * (y - 1.0) * self.mixed(x.hull(1.0), y.hull(1.0))


def _minimising_face(x: Interval, slope: Interval):
    if slope.lo >= 0.0:
        return Interval.point(x.lo)
    if slope.hi <= 0.0:
        return Interval.point(x.hi)
    return None
