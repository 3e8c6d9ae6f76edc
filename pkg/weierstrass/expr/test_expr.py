# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import math
import subprocess
import sys

import numpy as np
from hypothesis import given, settings, strategies as st

from weierstrass.errors import DomainError, ExprSyntaxError, UnknownIdentifier
from weierstrass.expr.evaluate import eval_point, eval_jet2, eval_interval, eval_jet2_interval, eval_array, \
    eval_jet3, eval_jet3_interval
from weierstrass.expr.nodes import Constant, NamedConstant, Variable, Unary, Binary, UnaryOp, BinaryOp, \
    contains_variable, substitute, gamma_a_expression, gamma_slice_parameter, FUNCTIONS
from weierstrass.expr.parser import parse
from weierstrass.expr.printer import to_text
from weierstrass.interval.interval import Interval
from weierstrass.paths import GRAMMAR_DOC
from weierstrass.test_utils.test_funcs import ParameterisedTestCase

X = Variable()

_SAMPLE_EXPRESSIONS = [
    "x",
    "log2(1+x)",
    "(4/pi)*arctan(x)",
    "cos(x)/cos(1)",
    "gamma(0.3*x)/gamma(0.3)",
    "x^2",
    "x^1.5",
    "exp(-x)*sin(3*x)",
    "ln(x)^3 - x",
    "x^x",
    "1/(1+x^2)",
    "lngamma(x+1)",
    "tan(x/3)",
    "arcsin(x/4)",
    "2^x - euler_gamma*e",
]
_sample_expressions = st.sampled_from(_SAMPLE_EXPRESSIONS).map(parse)
_sample_x = st.floats(min_value=0.3, max_value=2.5)


def _syntax_column(text: str):
    try:
        parse(text)
    except ExprSyntaxError as e:
        return e.column
    return None


def _expression_trees():
    leaves = st.one_of(
        st.just(X),
        st.sampled_from(["pi", "e", "euler_gamma"]).map(NamedConstant),
        st.integers(min_value=0, max_value=100).map(Constant),
        st.floats(min_value=0.0, max_value=1e6, allow_nan=False, allow_infinity=False).map(Constant),
    )

    def extend(children):
        return st.one_of(
            st.builds(Unary, st.sampled_from(list(UnaryOp)), children),
            st.builds(Binary, st.sampled_from(list(BinaryOp)), children, children),
        )

    return st.recursive(leaves, extend, max_leaves=12)


class ParserTest(ParameterisedTestCase):

    def test_parse(self):
        self.parameterised_test([
            ("x", X),
            ("(4/pi)*arctan(x)",
             Binary(BinaryOp.MUL, Binary(BinaryOp.DIV, Constant(4), NamedConstant("pi")),
                    Unary(UnaryOp.ARCTAN, X))),
            ("cos(x)/cos(1)",
             Binary(BinaryOp.DIV, Unary(UnaryOp.COS, X), Unary(UnaryOp.COS, Constant(1)))),
            ("1+2*3", Binary(BinaryOp.ADD, Constant(1), Binary(BinaryOp.MUL, Constant(2), Constant(3)))),
            ("2^3^2", Binary(BinaryOp.POW, Constant(2), Binary(BinaryOp.POW, Constant(3), Constant(2)))),
            ("5-3-1", Binary(BinaryOp.SUB, Binary(BinaryOp.SUB, Constant(5), Constant(3)), Constant(1))),
            ("-x^2", Unary(UnaryOp.NEG, Binary(BinaryOp.POW, X, Constant(2)))),
            ("2^-x", Binary(BinaryOp.POW, Constant(2), Unary(UnaryOp.NEG, X))),
            ("-x*2", Binary(BinaryOp.MUL, Unary(UnaryOp.NEG, X), Constant(2))),
            ("  x  +\t1 ", Binary(BinaryOp.ADD, X, Constant(1))),
            ("1e-06*x", Binary(BinaryOp.MUL, Constant(1e-6), X)),
            ("log2(1+x)", Unary(UnaryOp.LOG2, Binary(BinaryOp.ADD, Constant(1), X))),
            ("7", Constant(7)),
        ], parse)

    def test_syntax_error_columns(self):
        self.parameterised_test([
            ("ln(x", 5),
            ("", 1),
            ("x +", 4),
            ("sin x", 5),
            ("2x", 2),
            ("ln(x))", 6),
            ("x $ 1", 3),
            ("()", 2),
            ("x(2)", 2),
        ], _syntax_column)

    def test_expected_tokens(self):
        try:
            parse("ln(x")
            assert False, "expected a syntax error"
        except ExprSyntaxError as e:
            assert ")" in e.expected
            assert "+" in e.expected
            assert e.found == "end of input"

    def test_unknown_identifier(self):
        def unknown(text):
            try:
                parse(text)
            except UnknownIdentifier as e:
                return e.name, e.column
            return None

        self.parameterised_test([
            ("foo(x)", ("foo", 1)),
            ("x + y", ("y", 5)),
            ("sqrt(x)", ("sqrt", 1)),
        ], unknown)

    def test_grammar_documents_every_function(self):
        with open(GRAMMAR_DOC) as f:
            grammar = f.read()
        for name in FUNCTIONS:
            assert f'"{name}"' in grammar, name


class PrinterTest(ParameterisedTestCase):

    def test_to_text(self):
        self.parameterised_test([
            ("(4/pi)*arctan(x)", "4/pi*arctan(x)"),
            ("x-(x-1)", "x - (x - 1)"),
            ("(x-1)-x", "x - 1 - x"),
            ("2^3^2", "2^3^2"),
            ("(2^3)^2", "(2^3)^2"),
            ("-x^2", "-x^2"),
            ("(-x)^2", "(-x)^2"),
            ("-(x*2)", "-(x*2)"),
            ("1e-6*x", "1e-06*x"),
            ("3.0", "3"),
            ("0.5", "0.5"),
            ("x/(2*x)", "x/(2*x)"),
            ("gamma(0.2*x)/gamma(0.2)", "gamma(0.2*x)/gamma(0.2)"),
        ], lambda text: to_text(parse(text)))

    @settings(max_examples=500)
    @given(_expression_trees())
    def test_round_trip(self, expr):
        assert parse(to_text(expr)) == expr

    @given(st.sampled_from(_SAMPLE_EXPRESSIONS))
    def test_text_round_trip(self, text):
        tree = parse(text)
        assert parse(to_text(tree)) == tree


class NodesTest(ParameterisedTestCase):

    def test_contains_variable(self):
        self.parameterised_test([
            ("x", True),
            ("cos(1)/pi", False),
            ("2^(1+ln(x))", True),
        ], lambda text: contains_variable(parse(text)))

    def test_substitute(self):
        composed = substitute(parse("x^2"), parse("(4/pi)*arctan(x)"))
        assert composed == parse("((4/pi)*arctan(x))^2")

    def test_gamma_a_expression(self):
        f = gamma_a_expression(0.2)
        assert to_text(f) == "gamma(0.2*x)/gamma(0.2)"
        assert eval_point(f, 1.0) == 1.0

    def test_gamma_slice_parameter(self):
        self.parameterised_test([
            (gamma_a_expression(0.3), 0.3),
            (parse("gamma(x*0.25)/gamma(0.25)"), 0.25),
            (parse("gamma(0.3*x)/gamma(0.2)"), None),
            (parse("gamma(0.3*x)"), None),
            (parse("gamma(x)/gamma(1)"), None),
            (parse("cos(x)/cos(1)"), None),
        ], gamma_slice_parameter)


class EvaluateTest(ParameterisedTestCase):

    def test_eval_point(self):
        self.approx_test([
            ("log2(1+x)", 1.0, 1.0),
            ("(4/pi)*arctan(x)", 1.0, 1.0),
            ("cos(x)/cos(1)", 0.5, math.cos(0.5) / math.cos(1.0)),
            ("x^2", 3.0, 9.0),
            ("2^-x", 1.0, 0.5),
            ("euler_gamma", 5.0, 0.5772156649015329),
            ("ln(x)", 0.0, DomainError),
            ("1/(x-1)", 1.0, DomainError),
            ("x^0.5", -1.0, DomainError),
            ("gamma(x)", -0.5, DomainError),
            ("arcsin(x)", 1.5, DomainError),
            ("x^-1", 0.0, DomainError),
            ("exp(exp(x))", 10.0, DomainError),
        ], lambda text, x: eval_point(parse(text), x))

    def test_domain_error_names_node(self):
        try:
            eval_point(parse("2*ln(x-1)"), 0.5)
            assert False, "expected a domain error"
        except DomainError as e:
            assert e.node == "ln(x - 1)"
            assert e.value == -0.5

    def test_eval_jet2(self):
        ln2 = math.log(2.0)
        self.approx_test([
            ("x", 0.7, (0.7, 1.0, 0.0)),
            ("log2(1+x)", 1.0, (1.0, 1 / (2 * ln2), -1 / (4 * ln2))),
            ("x^2", 3.0, (9.0, 6.0, 2.0)),
            ("x^x", 1.0, (1.0, 1.0, 2.0)),
            ("exp(2*x)", 0.0, (1.0, 2.0, 4.0)),
            ("arcsin(x)", 1.0, DomainError),
        ], lambda text, x: eval_jet2(parse(text), x).as_tuple(), abs_tol=1e-15)

    def test_constant_jet_is_exact(self):
        jet = eval_jet2(parse("cos(1)+pi*gamma(0.5)"), 0.3)
        assert jet.d1 == 0.0 and jet.d2 == 0.0
        assert math.isclose(jet.v, math.cos(1.0) + math.pi * math.sqrt(math.pi), rel_tol=1e-12)

    def test_eval_interval(self):
        def encloses(text, lo, hi, inner_lo, inner_hi):
            enc = eval_interval(parse(text), Interval(lo, hi))
            return enc.lo <= inner_lo and inner_hi <= enc.hi

        self.parameterised_test([
            ("x", 0.2, 0.4, 0.2, 0.4, True),
            ("x*x - x", 0.0, 1.0, -0.25, 0.0, True),
            ("gamma(x)", 1.4, 1.5, 0.8856032, 0.8872, True),
            ("(4/pi)*arctan(x)", 1.0, 1.0, 1.0, 1.0, True),
        ], encloses)

    def test_interval_domain_errors(self):
        self.approx_test([
            ("ln(x)", Interval(0.0, 1.0), DomainError),
            ("1/(x-1)", Interval(0.5, 1.5), DomainError),
            ("x^0.5", Interval(-1.0, 1.0), DomainError),
            ("gamma(x-1)", Interval(0.5, 1.5), DomainError),
        ], lambda text, x: eval_interval(parse(text), x))

    @settings(max_examples=100_000, deadline=None)
    @given(_sample_expressions, _sample_x, st.floats(min_value=0.0, max_value=0.1),
           st.floats(min_value=0.0, max_value=1.0))
    def test_enclosure_soundness(self, f, x, w_lo, w_hi):
        box = Interval(x - w_lo, x + w_hi)
        assert eval_interval(f, box).contains(eval_point(f, x))
        jet = eval_jet2_interval(f, box)
        for enc, v in zip(jet.as_tuple(), eval_jet2(f, x).as_tuple()):
            assert enc.contains(v), f"{to_text(f)} over {box}: {enc} misses {v}"

    @settings(max_examples=200)
    @given(_sample_expressions, _sample_x, st.floats(min_value=0.0, max_value=0.2),
           st.floats(min_value=0.0, max_value=0.2))
    def test_inclusion_isotonic(self, f, x, w1, w2):
        narrow = Interval(x, x + w1)
        wide = Interval(x - w2, x + w1 + w2)
        assert eval_interval(f, narrow).subset_of(eval_interval(f, wide))

    @settings(max_examples=500)
    @given(_sample_expressions, _sample_x)
    def test_derivatives_match_finite_differences(self, f, x):
        v, d1, d2 = eval_jet2(f, x).as_tuple()
        h1, h2 = 1e-5, 1e-4
        fd1 = (eval_point(f, x + h1) - eval_point(f, x - h1)) / (2 * h1)
        fd2 = (eval_point(f, x + h2) - 2 * v + eval_point(f, x - h2)) / (h2 * h2)
        assert abs(d1 - fd1) <= max(1e-6, 1e-4 * abs(d1)), f"{to_text(f)}: {d1} vs {fd1}"
        assert abs(d2 - fd2) <= max(1e-6, 1e-4 * abs(d2)), f"{to_text(f)}: {d2} vs {fd2}"

    @settings(max_examples=100)
    @given(_sample_expressions)
    def test_eval_array_matches_point(self, f):
        xs = np.linspace(-1.0, 3.0, 41)
        values = eval_array(f, xs)
        for x, v in zip(xs, values):
            try:
                expected = eval_point(f, float(x))
            except DomainError:
                assert np.isnan(v), f"{to_text(f)} at {x}: {v} should be NaN"
                continue
            assert math.isclose(v, expected, rel_tol=1e-10, abs_tol=1e-12), f"{to_text(f)} at {x}"

    @settings(max_examples=300)
    @given(_expression_trees(), st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=0.0, max_value=0.5))
    def test_random_tree_enclosure(self, f, x, w):
        try:
            v = eval_point(f, x)
            enc = eval_interval(f, Interval(x, x + w))
        except DomainError:
            return
        assert enc.contains(v)

    def test_gamma_after_special_package_import(self):
        # the package re-exports the function gamma over its submodule of the same name
        subprocess.run([sys.executable, "-c", "import weierstrass.special; import weierstrass.expr.evaluate"],
                       check=True)
        f = parse("gamma(x)")
        root_pi = math.sqrt(math.pi)
        assert math.isclose(eval_point(f, 0.5), root_pi, rel_tol=1e-12)
        assert math.isclose(eval_jet2(f, 0.5).v, root_pi, rel_tol=1e-12)
        assert eval_interval(f, Interval.point(0.5)).contains(root_pi)
        assert np.allclose(eval_array(f, np.array([0.5, 1.0])), [root_pi, 1.0], rtol=1e-12)

    def test_eval_jet3(self):
        ln2 = math.log(2.0)
        self.approx_test([
            ("x^3", 2.0, (8.0, 12.0, 12.0, 6.0)),
            ("log2(1+x)", 1.0, (1.0, 1 / (2 * ln2), -1 / (4 * ln2), 2 / (8 * ln2))),
            ("exp(2*x)", 0.0, (1.0, 2.0, 4.0, 8.0)),
            ("lngamma(x)", 1.0, (0.0, -0.5772156649015329, math.pi ** 2 / 6, -2.4041138063191885)),
            ("arcsin(x)", 1.0, DomainError),
        ], lambda text, x: eval_jet3(parse(text), x).as_tuple(), rel=1e-11, abs_tol=1e-15)

    @settings(max_examples=300)
    @given(_sample_expressions, _sample_x)
    def test_third_derivative_matches_finite_differences(self, f, x):
        jet = eval_jet3(f, x)
        for a, b in zip(jet.as_tuple()[:3], eval_jet2(f, x).as_tuple()):
            assert math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)
        h = 1e-5
        fd3 = (eval_jet2(f, x + h).d2 - eval_jet2(f, x - h).d2) / (2 * h)
        assert abs(jet.d3 - fd3) <= max(1e-5, 1e-4 * abs(jet.d3)), f"{to_text(f)}: {jet.d3} vs {fd3}"

    @settings(max_examples=300)
    @given(_sample_expressions, _sample_x, st.floats(min_value=0.0, max_value=0.05),
           st.floats(min_value=0.0, max_value=0.5))
    def test_jet3_enclosure_soundness(self, f, x, w, frac):
        box = Interval(x, x + w)
        t = min(x + frac * w, box.hi)
        for enc, v in zip(eval_jet3_interval(f, box).as_tuple(), eval_jet3(f, t).as_tuple()):
            assert enc.contains(v), f"{to_text(f)} over {box}: {enc} misses {v}"
