# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Closure rules: verdicts derived for products, compositions and powers of
functions already classified, without classifying the result. They only ever
produce Certified verdicts; a missing precondition raises
PreconditionNotCertified.
"""
import logging
from typing import Sequence

from weierstrass.config import CertifyConfig
from weierstrass.constants import NORMALIZATION_TOLERANCE
from weierstrass.criteria import derivatives as d
from weierstrass.criteria.certify import Quantity, certify_on_products
from weierstrass.datatypes import FunctionFacts, Property, PropertyVerdict, Certified, Outcome, DomainKind, \
    DomainSpec
from weierstrass.errors import PreconditionNotCertified, DomainError
from weierstrass.expr.evaluate import eval_point, eval_interval
from weierstrass.expr.nodes import Expression, Binary, BinaryOp, Constant, substitute
from weierstrass.expr.printer import to_text
from weierstrass.interval.interval import Interval
from weierstrass.util import Deadline

PRODUCT = "product of submultiplicative factors with x f'(x) non-decreasing"
COMPOSITION = "composition with a non-decreasing convex outer function"
POWER = "power of a Weierstrass function"
INTEGER_POWER = "integer power of a submultiplicative function with x f'(x) non-decreasing"


def _derived(criterion: str, facts: Sequence[FunctionFacts], certificates=()) -> Certified:
    parts = [f.h_criterion for f in facts if f.h_certified()] + list(certificates)
    box = facts[0].domain.box()
    return Certified(criterion=criterion,
                     box=(box.lo, box.hi),
                     depth=max([c.depth for c in parts], default=0),
                     strict=False,
                     min_lower=min([c.min_lower for c in parts], default=0.0),
                     leaves=sum(c.leaves for c in parts))


def _require(condition: bool, missing: str):
    if not condition:
        raise PreconditionNotCertified(missing)


def _same_domain(facts: Sequence[FunctionFacts]) -> DomainSpec:
    domain = facts[0].domain
    for f in facts[1:]:
        _require(f.domain == domain, f"{f.text} was classified on {f.domain.label()}, not {domain.label()}")
    return domain


def product_expression(facts: Sequence[FunctionFacts]) -> Expression:
    result = facts[0].expression
    for f in facts[1:]:
        result = Binary(BinaryOp.MUL, result, f.expression)
    return result


def closure_product(facts: Sequence[FunctionFacts]) -> PropertyVerdict:
    """
    The product of functions that are each submultiplicative with x f'(x)
    non-decreasing on J is a Weierstrass function on J.
    """
    if not facts:
        raise ValueError("closure_product needs at least one factor")
    domain = _same_domain(facts)
    for f in facts:
        _require(f.certified(Property.SUBMULTIPLICATIVE), f"{f.text} submultiplicative")
        _require(f.h_certified(), f"{f.text}: x f'(x) non-decreasing")
    logging.info(f"Product of {len(facts)} factors is Weierstrass on {domain.label()}")
    return PropertyVerdict(Property.WEIERSTRASS, _derived(PRODUCT, facts), domain)


def _unit_value(f: Expression) -> float:
    try:
        return eval_point(f, 1.0)
    except DomainError:
        return float("nan")


def _certify(name: str, f: Expression, value_of, slope_of, domain: DomainSpec, cfg: CertifyConfig,
             deadline: Deadline, negate: bool = False) -> Certified:
    q = Quantity.of(name, f, value_of, slope_of)
    if negate:
        q = q.negated()
    c = certify_on_products(q, domain, cfg, deadline)
    _require(c.outcome == Outcome.CERTIFIED, f"{q.name} >= 0 on the range of xy over {domain.label()}")
    return c


def _maps_into(f: Expression, domain: DomainSpec):
    """
    A non-decreasing f with f(1) = 1 maps the box, and the range of xy, into
    themselves when it does so at their far ends.
    """
    unit = domain.kind == DomainKind.UNIT
    for b in (domain.box(), domain.product_box()):
        end = b.lo if unit else b.hi
        try:
            image = eval_interval(f, Interval.point(end))
        except DomainError:
            image = None
        inside = image is not None and (image.lo >= end if unit else image.hi <= end)
        _require(inside, f"{to_text(f)} maps {end:g} into [{b.lo:g}, {b.hi:g}]")


def closure_compose(f: FunctionFacts, g: FunctionFacts, cfg: CertifyConfig = CertifyConfig()) -> PropertyVerdict:
    """
    g o f is lWeierstrass on J when f(1) = g(1) = 1, f and g are non-decreasing,
    g is convex and x f'(x) is non-decreasing, all on the range of xy, and f
    maps the box and that range into themselves. g then maps J into J by
    monotonicity. When f and g are also submultiplicative, g o f is Weierstrass.
    """
    domain = _same_domain([f, g])
    _require(f.h_certified(), f"{f.text}: x f'(x) non-decreasing")
    for h in (f, g):
        _require(abs(_unit_value(h.expression) - 1.0) <= NORMALIZATION_TOLERANCE, f"{h.text}: value 1 at 1")

    deadline = Deadline(cfg.time_budget_s)
    certificates = [
        _certify("f'", f.expression, d.derivative_of, d.second_derivative_of, domain, cfg, deadline),
        _certify("g'", g.expression, d.derivative_of, d.second_derivative_of, domain, cfg, deadline),
        _certify("g''", g.expression, d.second_derivative_of, d.third_derivative_of, domain, cfg, deadline),
    ]
    _maps_into(f.expression, domain)

    if f.certified(Property.SUBMULTIPLICATIVE) and g.certified(Property.SUBMULTIPLICATIVE):
        prop = Property.WEIERSTRASS
    else:
        prop = Property.L_WEIERSTRASS
    logging.info(f"{g.text} after {f.text} is {prop.value} on {domain.label()}")
    return PropertyVerdict(prop, _derived(COMPOSITION, [f], certificates), domain)


def composed_expression(f: FunctionFacts, g: FunctionFacts) -> Expression:
    """g o f"""
    return substitute(g.expression, f.expression)


def power_expression(f: FunctionFacts, alpha: float) -> Expression:
    return Binary(BinaryOp.POW, f.expression, Constant(float(alpha)))


def closure_power(f: FunctionFacts, alpha: float) -> PropertyVerdict:
    """
    f^alpha is Weierstrass when f is (alpha > 1), and also for integer alpha >= 2
    when f is submultiplicative with x f'(x) non-decreasing (a product of equal
    factors). alpha = 1 returns f's own Weierstrass certificate.
    """
    alpha = float(alpha)
    if alpha == 1.0:
        _require(f.certified(Property.WEIERSTRASS), f"{f.text} Weierstrass")
        return f.verdict(Property.WEIERSTRASS)
    if alpha > 1.0 and f.certified(Property.WEIERSTRASS):
        return PropertyVerdict(Property.WEIERSTRASS, _derived(POWER, [f]), f.domain)
    if alpha >= 2.0 and alpha.is_integer() and f.certified(Property.SUBMULTIPLICATIVE) and f.h_certified():
        return PropertyVerdict(Property.WEIERSTRASS, _derived(INTEGER_POWER, [f]), f.domain)
    if alpha < 1.0:
        raise PreconditionNotCertified(f"exponent greater than 1, was {alpha!r}")
    raise PreconditionNotCertified(f"{f.text} Weierstrass")
