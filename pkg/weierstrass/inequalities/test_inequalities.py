# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import math

from hypothesis import given, settings, strategies as st

from weierstrass.constants import GAMMA_SWEEP
from weierstrass.datatypes import DomainSpec
from weierstrass.errors import DomainError, MixedDomainError, NotMonotone, OutOfRange, UnknownInequalityName
from weierstrass.expr.parser import parse
from weierstrass.inequalities import checks, fuzz, inverse, registry
from weierstrass.test_utils.test_funcs import ParameterisedTestCase

UNIT = DomainSpec.unit()
RAY = DomainSpec.ray()
ARCTAN = parse("(4/pi)*arctan(x)")

_unit_values = st.floats(min_value=1e-6, max_value=1.0)
_ray_values = st.floats(min_value=1.0, max_value=10.0)


def _sides(report):
    return report.lhs, report.rhs, report.slack


class ChecksTest(ParameterisedTestCase):

    def test_classical(self):
        self.approx_test([
            ((0.5, 0.5), (0.25, 0.0, 0.25)),
            ((0.9, 0.9, 0.9), (0.001, -1.7, 1.701)),
            ((1.0, 0.5), DomainError),
            ((0.5,), DomainError),
        ], lambda a: _sides(checks.check_classical(a)), rel=1e-12, abs_tol=1e-15)

    def test_product_form(self):
        self.approx_test([
            ((1.0, 1.0, 1.0), (1.0, 1.0, 0.0)),
            ((2.0, 3.0), (6.0, 4.0, 2.0)),
            ((0.5, 0.5), (0.25, 0.0, 0.25)),
            ((0.5, 1.5), MixedDomainError),
            ((0.0, 0.5), DomainError),
        ], lambda x: _sides(checks.check_product_form(x)), rel=1e-12, abs_tol=1e-15)

    def test_log_product(self):
        self.approx_test([
            ((1.0, 1.0), (4.0, 4.0, 0.0)),
            ((0.3, 0.5, 0.9), (3.705, 4.54, 0.835)),
            ((2.0, 3.0), (12.0, 14.0, 2.0)),
            ((0.5, 2.0), MixedDomainError),
        ], lambda x: _sides(checks.check_log_product(x)), rel=1e-12, abs_tol=1e-15)

    def test_log_product_expanded(self):
        self.approx_test([
            ((1.0, 1.0, 1.0), (6.0, 6.0, 0.0)),
            ((0.3, 0.5, 0.9), (2.57, 3.405, 0.835)),
            ((0.3, 0.5), DomainError),
            ((0.3, 0.5, 0.9, 0.1), DomainError),
        ], lambda x: _sides(checks.check_log_product_expanded(x)), rel=1e-12, abs_tol=1e-15)

    def test_log_product_notes_expanded_form(self):
        report = checks.check_log_product((0.3, 0.5, 0.9))
        assert any(n.startswith("expanded:") for n in report.notes), report.notes
        assert not any(n.startswith("expanded:") for n in checks.check_log_product((0.3, 0.5)).notes)

    def test_log_product_given_domain(self):
        assert checks.check_log_product((2.0, 3.0), RAY).holds
        with self.assertRaises(DomainError):
            checks.check_log_product((0.5, 0.7), RAY)

    def test_all_ones_equality(self):
        for n in range(2, 9):
            ones = (1.0,) * n
            for report in (checks.check_product_form(ones), checks.check_log_product(ones)):
                assert abs(report.slack) <= 1e-12, report

    def test_sin_display_fails_at_the_corner(self):
        report = checks.check_sin_display(1.0, 1.0)
        assert not report.holds
        assert math.isclose(report.slack, -1.0, abs_tol=1e-10), report.slack
        assert report.lhs == 1.0 and report.rhs == 1.0

    def test_sin_display_small_values(self):
        report = checks.check_sin_display(0.1, 0.1)
        mid = math.sin((4 / math.pi) * math.asin(0.1) ** 2)
        assert math.isclose(report.slack, min(mid - (-0.8), 0.01 - mid), rel_tol=1e-12)
        with self.assertRaises(DomainError):
            checks.check_sin_display(1.5, 0.5)

    def test_gamma_ineq(self):
        report = checks.check_gamma_ineq(0.4, 1.0, 1.0)
        assert abs(report.slack) <= 1e-10, report
        near_x1 = checks.check_gamma_ineq(0.4616, 0.5, 0.5)
        assert near_x1.holds and near_x1.slack > 0.0, near_x1
        self.approx_test([
            (0.5, 0.5, 0.5, DomainError),
            (0.0, 0.5, 0.5, DomainError),
            (0.2, 1.5, 0.5, DomainError),
        ], lambda a, x, y: checks.check_gamma_ineq(a, x, y).slack)

    def test_gamma_uv(self):
        report = checks.check_gamma_uv(0.3, 0.3, 0.3)
        assert abs(report.slack) <= 1e-10, report
        assert checks.UV_READING in report.notes
        self.approx_test([
            (0.3, 0.4, 0.1, DomainError),
            (0.47, 0.1, 0.1, DomainError),
        ], lambda a, u, v: checks.check_gamma_uv(a, u, v).slack)

    def test_gamma_uv_is_the_substituted_form(self):
        a, x, y = 0.2, 0.7, 0.4
        assert math.isclose(checks.check_gamma_uv(a, a * x, a * y).slack,
                            checks.check_gamma_ineq(a, x, y).slack, rel_tol=1e-9)

    def test_weierstrass_chain(self):
        f = parse("log2(1+x)")
        assert checks.check_weierstrass_chain(f, UNIT, (0.5, 0.5, 0.5)).holds
        assert checks.check_weierstrass_chain(f, RAY, (2.0, 3.0, 1.5)).holds
        identity = checks.check_weierstrass_chain(parse("x"), UNIT, (1.0, 1.0))
        assert abs(identity.slack) <= 1e-15
        with self.assertRaises(DomainError):
            checks.check_weierstrass_chain(f, UNIT, (0.5, 2.0))

    @settings(max_examples=300)
    @given(st.lists(st.floats(min_value=1e-6, max_value=1 - 1e-6), min_size=2, max_size=8))
    def test_classical_holds(self, a):
        assert checks.check_classical(a).holds

    @settings(max_examples=300)
    @given(st.one_of(st.lists(_unit_values, min_size=2, max_size=8), st.lists(_ray_values, min_size=2, max_size=8)))
    def test_product_and_log_product_hold(self, x):
        assert checks.check_product_form(x).holds
        assert checks.check_log_product(x).holds

    @settings(max_examples=300)
    @given(st.one_of(st.tuples(_unit_values, _unit_values), st.tuples(_ray_values, _ray_values)))
    def test_two_variable_log_product_is_a_product_of_differences(self, xy):
        x, y = xy
        slack = checks.check_log_product(xy).slack
        assert math.isclose(slack, (1 - x) * (1 - y), abs_tol=1e-12 * max(1.0, x * y)), (slack, xy)


class InverseTest(ParameterisedTestCase):

    def test_invert_numeric(self):
        self.approx_test([
            ("x", UNIT, 0.3, 0.3),
            ("x", RAY, 3.0, 3.0),
            ("(4/pi)*arctan(x)", UNIT, 1.0, 1.0),
            ("(4/pi)*arctan(x)", UNIT, 0.5, math.tan(math.pi / 8)),
            ("(4/pi)*arctan(x)", UNIT, 1.5, OutOfRange),
            ("cos(6*x)", UNIT, 0.5, NotMonotone),
        ], lambda text, domain, y: inverse.invert_numeric(parse(text), domain, y), rel=0.0, abs_tol=1e-11)

    def test_round_trip(self):
        psi = inverse.Inverse(ARCTAN, UNIT)
        for y in (0.01, 0.2, 0.77, 0.999):
            x = psi(y)
            assert abs((4 / math.pi) * math.atan(x) - y) <= 1e-10, (y, x)

    def test_many_agrees_with_scalar(self):
        psi = inverse.Inverse(parse("1/(2-x)"), UNIT)
        lo, hi = psi.value_range()
        ys = [lo + (hi - lo) * t for t in (0.1, 0.5, 0.9)]
        for y, x in zip(ys, psi.many(ys)):
            assert abs(x - psi(y)) <= 1e-11, (y, x)

    def test_sandwich(self):
        identity = inverse.check_sandwich(parse("x"), UNIT, 0.3, 0.6)
        assert math.isclose(identity.slack, 0.0, abs_tol=1e-11), identity
        corner = inverse.check_sandwich(ARCTAN, UNIT, 1.0, 1.0)
        assert corner.holds
        assert abs(corner.slack) <= 1e-10, corner
        assert inverse.check_sandwich(ARCTAN, UNIT, 0.3, 0.8).holds

    def test_sandwich_chain(self):
        assert inverse.check_sandwich_chain(ARCTAN, UNIT, (0.9, 0.8, 0.7)).holds
        with self.assertRaises(OutOfRange):
            inverse.check_sandwich_chain(ARCTAN, UNIT, (0.9, 1.8))


class FuzzTest(ParameterisedTestCase):

    def test_classical(self):
        summary = fuzz.fuzz_classical(100_000)
        assert summary.samples == 100_000
        assert summary.violations == 0, summary

    def test_product_form(self):
        for domain in (UNIT, RAY):
            summary = fuzz.fuzz_product_form(domain, 100_000)
            assert summary.violations == 0, summary

    def test_log_product(self):
        for domain in (UNIT, RAY):
            summary = fuzz.fuzz_log_product(domain, 100_000)
            assert summary.violations == 0, summary
            assert summary.min_slack >= -1e-12, summary

    def test_log_product_expanded(self):
        for domain in (UNIT, RAY):
            summary = fuzz.fuzz_log_product_expanded(domain, 10_000)
            assert summary.samples == 10_000
            assert summary.violations == 0, summary

    def test_gamma(self):
        for a in GAMMA_SWEEP:
            summary = fuzz.fuzz_gamma(a, 10_000)
            assert summary.violations == 0, summary
            uv = fuzz.fuzz_gamma_uv(a, 10_000)
            assert uv.violations == 0, uv

    def test_gamma_parameter_out_of_range(self):
        with self.assertRaises(DomainError):
            fuzz.fuzz_gamma(0.6, 10)
        with self.assertRaises(DomainError):
            fuzz.fuzz_gamma_uv(0.0, 10)

    def test_sandwich(self):
        summary = fuzz.fuzz_sandwich(ARCTAN, UNIT, 10_000)
        assert summary.violations == 0, summary
        assert summary.min_slack >= -1e-10, summary
        assert all(1e-3 <= v <= 1.0 + 1e-12 for v in summary.worst_inputs), summary

    def test_weierstrass_chain(self):
        summary = fuzz.fuzz_weierstrass_chain(parse("log2(1+x)"), UNIT, 2_000)
        assert summary.violations == 0, summary

    def test_chain_finds_violations(self):
        summary = fuzz.fuzz_weierstrass_chain(parse("cos(x)/cos(1)"), UNIT, 2_000)
        assert summary.violations > 0, summary

    def test_deterministic(self):
        assert fuzz.fuzz_classical(1_000, seed=3) == fuzz.fuzz_classical(1_000, seed=3)
        assert fuzz.fuzz_gamma(0.2, 1_000, seed=3) == fuzz.fuzz_gamma(0.2, 1_000, seed=3)
        assert fuzz.fuzz_classical(1_000, seed=3).worst_inputs != fuzz.fuzz_classical(1_000, seed=4).worst_inputs


class RegistryTest(ParameterisedTestCase):

    def test_check_named(self):
        self.parameterised_test([
            ("classical", (0.5, 0.5), ["classical"]),
            ("logprod", (0.3, 0.5, 0.9), ["logprod", "logprod-expanded"]),
            ("logprod", (0.3, 0.5), ["logprod"]),
            ("sin", (1.0, 1.0), ["sin"]),
            ("gamma", (0.4, 1.0, 1.0), ["gamma"]),
            ("gamma-uv", (0.3, 0.2, 0.1), ["gamma-uv"]),
        ], lambda name, values: [r.name for r in registry.check_named(name, values)])

    def test_check_named_with_expression(self):
        assert registry.check_named("sandwich", (1.0, 1.0), ARCTAN)[0].name == "sandwich"
        assert registry.check_named("sandwich", (0.9, 0.9, 0.9), ARCTAN)[0].name == "sandwich-chain"
        assert registry.check_named("chain", (0.5, 0.5), ARCTAN)[0].name == "chain"

    def test_errors(self):
        with self.assertRaises(UnknownInequalityName):
            registry.check_named("nope", (1.0,))
        with self.assertRaises(ValueError):
            registry.check_named("sandwich", (0.3, 0.6))
        with self.assertRaises(ValueError):
            registry.check_named("sin", (0.3,))
        with self.assertRaises(ValueError):
            registry.fuzz_named("sin", 10, 0)
        with self.assertRaises(ValueError):
            registry.fuzz_named("gamma", 10, 0)

    def test_fuzz_named(self):
        self.parameterised_test([
            ("classical", (), ["classical"]),
            ("logprod", (), ["logprod", "logprod-expanded"]),
            ("gamma", (0.2,), ["gamma"]),
        ], lambda name, values: [s.name for s in registry.fuzz_named(name, 100, 0, values)])
