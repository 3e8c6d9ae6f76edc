# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Closed real intervals with outward widening.

Directed hardware rounding is not available portably, so every primitive widens
its result by INTERVAL_WIDEN_EPS machine epsilons (relative) plus
INTERVAL_WIDEN_FLOOR (absolute) on each side. Bounds are always finite: an
operation whose result would overflow raises DomainError.
"""
import math
import sys
from dataclasses import dataclass
from typing import Tuple, Union

from weierstrass.constants import INTERVAL_WIDEN_EPS, INTERVAL_WIDEN_FLOOR
from weierstrass.errors import DomainError

_EPS = sys.float_info.epsilon
_REL = INTERVAL_WIDEN_EPS * _EPS
_TWO_PI = 2.0 * math.pi
_HALF_PI = 0.5 * math.pi


def _down(v: float, ops: int = 1) -> float:
    return v - (ops * _REL * abs(v) + INTERVAL_WIDEN_FLOOR)


def _up(v: float, ops: int = 1) -> float:
    return v + (ops * _REL * abs(v) + INTERVAL_WIDEN_FLOOR)


def _outward(lo: float, hi: float, ops: int = 1) -> 'Interval':
    lo, hi = _down(lo, ops), _up(hi, ops)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise DomainError("interval result overflows", value=(lo, hi))
    return Interval(lo, hi)


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        object.__setattr__(self, 'lo', float(self.lo))
        object.__setattr__(self, 'hi', float(self.hi))
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError("interval bounds must be finite", value=(self.lo, self.hi))
        if self.lo > self.hi:
            raise DomainError("interval lower bound exceeds upper bound", value=(self.lo, self.hi))

    @classmethod
    def point(cls, v: float) -> 'Interval':
        """The degenerate interval [v, v]. Exact: use for values known exactly."""
        return cls(v, v)

    @classmethod
    def around(cls, v: float) -> 'Interval':
        """An enclosure of a real constant that `v` only approximates (pi, e, ...)"""
        return _outward(v, v)

    def width(self) -> float:
        return self.hi - self.lo

    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        return min(max(m, self.lo), self.hi)

    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Union[float, 'Interval']) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def subset_of(self, other: 'Interval') -> bool:
        return other.contains(self)

    def intersects(self, other: 'Interval') -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: Union[float, 'Interval']) -> 'Interval':
        other = as_interval(other)
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def bisect(self) -> Tuple['Interval', 'Interval']:
        """Halves at the midpoint, sharing exactly the midpoint"""
        if self.width() <= 0:
            raise DomainError("cannot bisect a degenerate interval", value=self)
        m = self.mid()
        return Interval(self.lo, m), Interval(m, self.hi)

    def __add__(self, other):
        other = as_interval(other)
        return _outward(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_interval(other)
        return _outward(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return as_interval(other) - self

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other):
        other = as_interval(other)
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return _outward(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_interval(other)
        if other.lo <= 0.0 <= other.hi:
            raise DomainError("division by an interval containing 0", value=other)
        q = (self.lo / other.lo, self.lo / other.hi, self.hi / other.lo, self.hi / other.hi)
        return _outward(min(q), max(q))

    def __rtruediv__(self, other):
        return as_interval(other) / self

    def __pow__(self, n):
        if isinstance(n, int):
            return pow_int(self, n)
        return pow(self, n)

    def __repr__(self):
        return f"[{self.lo!r}, {self.hi!r}]"


def as_interval(v: Union[float, int, Interval]) -> Interval:
    if isinstance(v, Interval):
        return v
    return Interval.point(v)


PI = Interval.around(math.pi)
E = Interval.around(math.e)
LN2 = Interval.around(math.log(2.0))


def exp(x: Interval) -> Interval:
    try:
        lo, hi = math.exp(x.lo), math.exp(x.hi)
    except OverflowError:
        raise DomainError("exp overflows", value=x)
    r = _outward(lo, hi)
    return Interval(max(r.lo, 0.0), r.hi)


def ln(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise DomainError("ln of an interval reaching 0 or below", value=x)
    return _outward(math.log(x.lo), math.log(x.hi))


def log2(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise DomainError("log2 of an interval reaching 0 or below", value=x)
    return _outward(math.log2(x.lo), math.log2(x.hi))


def sqrt(x: Interval) -> Interval:
    if x.lo < 0.0:
        raise DomainError("sqrt of an interval reaching below 0", value=x)
    r = _outward(math.sqrt(x.lo), math.sqrt(x.hi))
    return Interval(max(r.lo, 0.0), r.hi)


def _hits_phase(x: Interval, phase: float) -> bool:
    """True if some phase + 2k*pi lies in x, allowing for the error in the multiple of pi"""
    k = math.floor((x.lo - phase) / _TWO_PI)
    for j in range(k, k + 3):
        t = phase + j * _TWO_PI
        slack = 8 * _EPS * max(1.0, abs(t))
        if x.lo - slack <= t <= x.hi + slack:
            return True
    return False


def _periodic(x: Interval, fn, max_phase: float, min_phase: float) -> Interval:
    if x.width() >= _TWO_PI:
        return Interval(-1.0, 1.0)
    a, b = fn(x.lo), fn(x.hi)
    lo, hi = min(a, b), max(a, b)
    if _hits_phase(x, max_phase):
        hi = 1.0
    if _hits_phase(x, min_phase):
        lo = -1.0
    r = _outward(lo, hi)
    return Interval(max(r.lo, -1.0), min(r.hi, 1.0))


def sin(x: Interval) -> Interval:
    return _periodic(x, math.sin, _HALF_PI, -_HALF_PI)


def cos(x: Interval) -> Interval:
    return _periodic(x, math.cos, 0.0, math.pi)


def tan(x: Interval) -> Interval:
    if x.width() >= math.pi or _hits_phase(x, _HALF_PI) or _hits_phase(x, -_HALF_PI):
        raise DomainError("tan of an interval containing a pole", value=x)
    return _outward(math.tan(x.lo), math.tan(x.hi))


def arctan(x: Interval) -> Interval:
    return _outward(math.atan(x.lo), math.atan(x.hi))


def arcsin(x: Interval) -> Interval:
    if x.lo < -1.0 or x.hi > 1.0:
        raise DomainError("arcsin of an interval outside [-1, 1]", value=x)
    return _outward(math.asin(x.lo), math.asin(x.hi))


def _ipow(v: float, n: int) -> float:
    """v**n for n >= 0 by repeated squaring"""
    result = 1.0
    while n:
        if n & 1:
            result *= v
        v *= v
        n >>= 1
    return result


def pow_int(x: Interval, n: int) -> Interval:
    if n == 0:
        return Interval.point(1.0)
    if n < 0:
        if x.lo <= 0.0 <= x.hi:
            raise DomainError(f"negative power {n} of an interval containing 0", value=x)
        return 1.0 / pow_int(x, -n)
    try:
        a, b = _ipow(x.lo, n), _ipow(x.hi, n)
    except OverflowError:
        raise DomainError(f"power {n} overflows", value=x)
    ops = 2 * n.bit_length()
    if n % 2 == 1 or x.lo >= 0.0:
        return _outward(a, b, ops)
    if x.hi <= 0.0:
        return _outward(b, a, ops)
    r = _outward(0.0, max(a, b), ops)
    return Interval(0.0, r.hi)


def square(x: Interval) -> Interval:
    return pow_int(x, 2)


def pow(x: Interval, y: Union[float, Interval]) -> Interval:
    """x**y for a strictly positive base"""
    if x.lo <= 0.0:
        raise DomainError("non-integer power of an interval reaching 0 or below", value=x)
    return exp(as_interval(y) * ln(x))
