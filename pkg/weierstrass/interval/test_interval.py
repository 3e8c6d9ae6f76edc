# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import math
import operator

from hypothesis import given, settings, strategies as st

from weierstrass.errors import DomainError
from weierstrass.interval import interval as iv
from weierstrass.interval.interval import Interval
from weierstrass.interval.jet import Jet2, Jet3
from weierstrass.test_utils.test_funcs import ParameterisedTestCase

_reals = st.floats(min_value=-50.0, max_value=50.0, allow_nan=False, allow_infinity=False)
_widths = st.floats(min_value=0.0, max_value=5.0, allow_nan=False, allow_infinity=False)

_BINARY = [operator.add, operator.sub, operator.mul]


def _encloses(outer: Interval, lo: float, hi: float) -> bool:
    return outer.lo <= lo and hi <= outer.hi


class IntervalTest(ParameterisedTestCase):

    def test_arithmetic_examples(self):
        self.parameterised_test([
            (Interval(1, 2) + Interval(3, 4), 4.0, 6.0, True),
            (Interval(-1, 1) * Interval(-1, 1), -1.0, 1.0, True),
            (iv.sin(Interval(0.0, math.pi / 4)), 0.0, math.sqrt(2) / 2, True),
            (iv.cos(Interval(-0.5, 0.5)), math.cos(0.5), 1.0, True),
            (iv.sin(Interval(3.0, 4.0)), math.sin(4.0), math.sin(3.0), True),
            (iv.square(Interval(-1.0, 1.0)), 0.0, 1.0, True),
            (iv.pow_int(Interval(-2.0, 1.0), 3), -8.0, 1.0, True),
            (Interval(1, 2) / Interval(4, 8), 0.125, 0.5, True),
        ], _encloses)

    def test_tight(self):
        r = Interval(1, 2) + Interval(3, 4)
        assert r.lo > 4.0 - 1e-12 and r.hi < 6.0 + 1e-12
        # even powers of an interval straddling 0 start exactly at 0:
        assert iv.square(Interval(-1.0, 1.0)).lo == 0.0
        s = iv.sin(Interval(0.0, math.pi / 4))
        assert s.hi < math.sqrt(2) / 2 + 1e-12

    def test_bisect(self):
        self.parameterised_test([
            (Interval(0, 1), (Interval(0, 0.5), Interval(0.5, 1))),
            (Interval(1, 4), (Interval(1, 2.5), Interval(2.5, 4))),
        ], lambda x: x.bisect())

    def test_domain_errors(self):
        def raises(fn, *args):
            try:
                fn(*args)
            except DomainError:
                return True
            return False

        self.parameterised_test([
            (Interval(1, 1).bisect, True),
            (lambda: Interval(1, 2) / Interval(-1, 1), True),
            (lambda: iv.ln(Interval(0.0, 1.0)), True),
            (lambda: iv.tan(Interval(1.5, 1.6)), True),
            (lambda: iv.arcsin(Interval(0.5, 1.5)), True),
            (lambda: iv.pow(Interval(-1.0, 2.0), 0.5), True),
            (lambda: iv.exp(Interval(0.0, 1000.0)), True),
            (lambda: Interval(2.0, 1.0), True),
            (lambda: Interval(0.0, math.inf), True),
            (lambda: iv.ln(Interval(0.5, 1.0)), False),
        ], raises)

    @settings(max_examples=100_000, deadline=None)
    @given(_reals, _reals, _widths, _widths, _widths, _widths)
    def test_point_consistency(self, a, b, wa1, wa2, wb1, wb2):
        x = Interval(a - wa1, a + wa2)
        y = Interval(b - wb1, b + wb2)
        for op in _BINARY:
            assert op(x, y).contains(op(a, b)), f"{op.__name__}({x}, {y}) misses {op(a, b)}"
        # divisors near the subnormal range overflow, which is a DomainError rather than an enclosure
        if min(abs(y.lo), abs(y.hi)) >= 1e-100 and not y.contains(0.0):
            assert (x / y).contains(a / b)

    @settings(max_examples=300)
    @given(st.floats(min_value=0.01, max_value=20.0), _widths)
    def test_elementary_point_consistency(self, a, w):
        x = Interval(a, a + w)
        t = a + w / 3
        assert iv.exp(Interval(-a, -a + w)).contains(math.exp(-a + w / 2))
        assert iv.ln(x).contains(math.log(t))
        assert iv.log2(x).contains(math.log2(t))
        assert iv.sqrt(x).contains(math.sqrt(t))
        assert iv.sin(x).contains(math.sin(t))
        assert iv.cos(x).contains(math.cos(t))
        assert iv.arctan(x).contains(math.atan(t))
        assert iv.pow(x, 1.5).contains(t ** 1.5)
        assert iv.pow_int(x, 5).contains(t ** 5)

    @settings(max_examples=200)
    @given(_reals, _reals, _widths, _widths, _widths, _widths)
    def test_inclusion_isotonic(self, a, b, w1, w2, w3, w4):
        x = Interval(a, a + w1)
        y = Interval(b, b + w2)
        x_wide = Interval(a - w3, a + w1 + w4)
        y_wide = Interval(b - w4, b + w2 + w3)
        for op in _BINARY:
            assert op(x, y).subset_of(op(x_wide, y_wide))

    @given(_reals, st.floats(min_value=1e-6, max_value=10.0), st.floats(min_value=0.0, max_value=1.0))
    def test_bisect_covers(self, a, w, frac):
        x = Interval(a, a + w)
        left, right = x.bisect()
        t = min(a + frac * w, x.hi)
        assert left.contains(t) or right.contains(t)
        assert left.hi == right.lo
        assert left.lo == x.lo and right.hi == x.hi


class Jet2Test(ParameterisedTestCase):

    def test_rules(self):
        x = Jet2.variable(3.0)
        self.approx_test([
            # x^2 at 3
            ((x * x).as_tuple(), (9.0, 6.0, 2.0)),
            # 1/x at 3: (1/3, -1/9, 2/27)
            ((Jet2.constant(1.0) / x).as_tuple(), (1 / 3, -1 / 9, 2 / 27)),
            ((x.scale(2.0).shift(1.0)).as_tuple(), (7.0, 2.0, 0.0)),
            ((x - x).as_tuple(), (0.0, 0.0, 0.0)),
        ], lambda t: t)

    def test_chain(self):
        # sin(x^2) at x = 0.5: value sin(.25), d1 = 2x cos(x^2), d2 = 2cos(x^2) - 4x^2 sin(x^2)
        u = Jet2.variable(0.5)
        u = u * u
        j = u.chain(math.sin(u.v), math.cos(u.v), -math.sin(u.v))
        self.approx_test([
            (j.as_tuple(), (math.sin(0.25), math.cos(0.25), 2 * math.cos(0.25) - math.sin(0.25))),
        ], lambda t: t)

    def test_interval_jet_encloses_point_jet(self):
        xi = Jet2.variable(Interval(0.4, 0.6))
        jet = (xi * xi) / (xi.shift(1.0))
        xp = Jet2.variable(0.5)
        point = (xp * xp) / (xp.shift(1.0))
        for enc, v in zip(jet.as_tuple(), point.as_tuple()):
            assert enc.contains(v)


class Jet3Test(ParameterisedTestCase):

    def test_rules(self):
        x = Jet3.variable(3.0)
        self.approx_test([
            ((x * x).as_tuple(), (9.0, 6.0, 2.0, 0.0)),
            ((x * x * x).as_tuple(), (27.0, 27.0, 18.0, 6.0)),
            ((Jet3.constant(1.0) / x).as_tuple(), (1 / 3, -1 / 9, 2 / 27, -2 / 27)),
            ((x.scale(2.0).shift(1.0)).as_tuple(), (7.0, 2.0, 0.0, 0.0)),
        ], lambda t: t, abs_tol=1e-15)

    def test_chain(self):
        # sin(x^2) at x = 0.5; third derivative -12x sin(x^2) - 8x^3 cos(x^2)
        u = Jet3.variable(0.5)
        u = u * u
        j = u.chain(math.sin(u.v), math.cos(u.v), -math.sin(u.v), -math.cos(u.v))
        self.approx_test([
            (j.as_tuple(), (math.sin(0.25), math.cos(0.25), 2 * math.cos(0.25) - math.sin(0.25),
                            -6.0 * math.sin(0.25) - math.cos(0.25))),
        ], lambda t: t)

    def test_agrees_with_jet2(self):
        for x in (0.25, 1.0, 4.0):
            j2 = Jet2.variable(x)
            j3 = Jet3.variable(x)
            f2 = (j2 * j2 - j2) / j2.shift(1.0)
            f3 = (j3 * j3 - j3) / j3.shift(1.0)
            for a, b in zip(f2.as_tuple(), f3.as_tuple()[:3]):
                assert math.isclose(a, b, rel_tol=1e-14, abs_tol=1e-15)

    def test_interval_jet_encloses_point_jet(self):
        xi = Jet3.variable(Interval(0.4, 0.6))
        jet = (xi * xi) / (xi.shift(1.0))
        xp = Jet3.variable(0.5)
        point = (xp * xp) / (xp.shift(1.0))
        for enc, v in zip(jet.as_tuple(), point.as_tuple()):
            assert enc.contains(v)
