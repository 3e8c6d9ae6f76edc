# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Classification of a normalised candidate f on a truncated interval J.

Each of the one-sided properties runs a pipeline of sufficient criteria,
cheapest first, then a counterexample search, then the direct two-variable
certificate. The Weierstrass verdict is the conjunction of lWeierstrass and
Submultiplicative.
"""
import logging
import time
from typing import List, Optional, Tuple

from weierstrass.config import CertifyConfig
from weierstrass.criteria import derivatives as d
from weierstrass.criteria.certify import Quantity, certify_sign, certify_pair_inequality, certify_on_products, \
    certify_positive_on_products
from weierstrass.criteria.logconvex import certify_logconvex_pair
from weierstrass.criteria.pairs import Side
from weierstrass.criteria.search import search_counterexample
from weierstrass.datatypes import DomainSpec, NormalizationCheck, Property, PropertyVerdict, Certified, \
    Refuted, Inconclusive, Outcome, Verdict, FunctionFacts
from weierstrass.errors import DomainError, NormalizationError
from weierstrass.expr.evaluate import eval_point
from weierstrass.expr.nodes import Expression, gamma_slice_parameter
from weierstrass.expr.printer import to_text
from weierstrass.interval.interval import Interval
from weierstrass.special.interval_gamma import digamma_interval, trigamma_interval, tetragamma_interval
from weierstrass.util import Deadline

H_INCREASING = "x f'(x) non-decreasing"
H_DECREASING = "x f'(x) non-increasing"
LOGLOG_CONCAVE = "ln f(e^u) concave"
GAMMA_SLICE = "gamma slice: t psi(t) non-increasing"
RIGHT_ONE_SIGNED = "right-Weierstrass with f - 1 of one sign"


def check_normalization(f: Expression, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig()) -> NormalizationCheck:
    """f(1) and a subdivision certificate that the enclosure of f over the truncated box is > 0"""
    try:
        f1 = eval_point(f, 1.0)
    except DomainError:
        f1 = float("nan")
    try:
        positive = certify_sign(Quantity.of("f", f, d.value_of, d.derivative_of), domain.box(), cfg, strict=True)
    except DomainError:
        return NormalizationCheck(f1=f1, positive_on_box=False)
    if positive.outcome != Outcome.CERTIFIED:
        return NormalizationCheck(f1=f1, positive_on_box=False)
    return NormalizationCheck(f1=f1, positive_on_box=True, min_lower=positive.min_lower)


def _admit(f: Expression, domain: DomainSpec, cfg: CertifyConfig):
    check = check_normalization(f, domain, cfg)
    if not check.admitted:
        if not check.positive_on_box:
            reason = f"f is not certified positive on {domain.label()}"
        else:
            reason = f"f(1) = {check.f1!r}, not 1"
        raise NormalizationError(f"{to_text(f)} is not admitted: {reason}", check=check)


def _settle(f: Expression, domain: DomainSpec, side: Side, cfg: CertifyConfig, deadline: Deadline,
            jets: d.JetCache) -> Verdict:
    """Counterexample search, then the direct two-variable certificate"""
    witness = search_counterexample(f, domain, side, cfg)
    if witness is not None:
        return Refuted(witness)
    return certify_pair_inequality(f, domain.box(), side, cfg, deadline, jets)


def _g_quantity(f: Expression, jets: d.JetCache) -> Quantity:
    return Quantity.of("f'/x + f''", f, d.g_of, d.g_slope_of, jets)


def _left(f: Expression, domain: DomainSpec, cfg: CertifyConfig, jets: d.JetCache) -> Tuple[Verdict, Verdict]:
    """The lWeierstrass verdict and the certificate of x f'(x) non-decreasing"""
    deadline = Deadline(cfg.time_budget_s)
    h = certify_on_products(_g_quantity(f, jets), domain, cfg, deadline, criterion=H_INCREASING)
    if h.outcome == Outcome.CERTIFIED:
        return h, h
    pair = certify_logconvex_pair(f, domain, cfg, deadline, jets)
    if pair.outcome == Outcome.CERTIFIED:
        return pair, h
    return _settle(f, domain, Side.LEFT, cfg, deadline, jets), h


def _right(f: Expression, domain: DomainSpec, cfg: CertifyConfig, jets: d.JetCache) -> Verdict:
    deadline = Deadline(cfg.time_budget_s)
    h = certify_on_products(_g_quantity(f, jets).negated(), domain, cfg, deadline, criterion=H_DECREASING)
    if h.outcome == Outcome.CERTIFIED:
        return h
    return _settle(f, domain, Side.RIGHT, cfg, deadline, jets)


def _gamma_slice_quantity(a: float) -> Quantity:
    """
    For f(x) = Gamma(a x) / Gamma(a), ln f(e^u) is concave exactly when t psi(t)
    is non-increasing for t = a x, i.e. q(t) = -(psi(t + 1) + t psi'(t + 1)) >= 0.
    The quantity is expressed in x.
    """
    def value(x: Interval) -> Interval:
        t = a * x
        return -(digamma_interval(t + 1.0) + t * trigamma_interval(t + 1.0))

    def slope(x: Interval) -> Interval:
        t = a * x
        return -a * (2.0 * trigamma_interval(t + 1.0) + t * tetragamma_interval(t + 1.0))

    return Quantity(f"-(psi(t+1) + t psi'(t+1)), t = {a!r} x", value, slope)


def _loglog_concave(f: Expression, domain: DomainSpec, cfg: CertifyConfig, deadline: Deadline,
                    jets: d.JetCache) -> Verdict:
    """K >= 0 is log-log concavity only where f > 0, so positivity on the range of xy comes first"""
    positive = certify_positive_on_products(f, domain, cfg, deadline, jets)
    if positive.outcome != Outcome.CERTIFIED:
        return Inconclusive(f"f not certified positive on the range of xy: {positive.reason}", positive.subbox)
    return certify_on_products(
        Quantity.of("x f'^2 - f (f' + x f'')", f, d.loglog_concavity_of, d.loglog_concavity_slope_of, jets),
        domain, cfg, deadline, criterion=LOGLOG_CONCAVE)


def _submultiplicative(f: Expression, domain: DomainSpec, cfg: CertifyConfig, jets: d.JetCache,
                       right: Verdict) -> Verdict:
    deadline = Deadline(cfg.time_budget_s)
    attempts = []

    a = gamma_slice_parameter(f)
    if a is not None:
        attempts.append(lambda: certify_on_products(_gamma_slice_quantity(a), domain, cfg, deadline,
                                                    criterion=GAMMA_SLICE))
    attempts.append(lambda: _loglog_concave(f, domain, cfg, deadline, jets))
    for attempt in attempts:
        certified = attempt()
        if certified.outcome == Outcome.CERTIFIED:
            return certified

    if right.outcome == Outcome.CERTIFIED:
        one_signed = _right_one_signed(f, domain.box(), cfg, deadline, jets, right)
        if one_signed is not None:
            return one_signed

    return _settle(f, domain, Side.SUBMULTIPLICATIVE, cfg, deadline, jets)


def _minus_one(f: Expression, x, jets: d.JetCache = None):
    return d.value_of(f, x, jets) - 1.0


def _right_one_signed(f: Expression, box: Interval, cfg: CertifyConfig, deadline: Deadline,
                      jets: d.JetCache, right: Certified) -> Optional[Certified]:
    """
    f(x) f(y) - f(xy) = (f(x) - 1)(f(y) - 1) + [f(x) + f(y) - 1 - f(xy)], so the
    right inequality and f - 1 of one sign on J give submultiplicativity.
    """
    above = Quantity.of("f - 1", f, _minus_one, d.derivative_of, jets)
    for q in (above.negated(), above):
        c = certify_sign(q, box, cfg, deadline)
        if c.outcome == Outcome.CERTIFIED:
            return Certified(criterion=RIGHT_ONE_SIGNED, box=c.box, depth=max(c.depth, right.depth),
                             strict=False, min_lower=min(c.min_lower, right.min_lower),
                             leaves=c.leaves + right.leaves, pair=right.pair)
    return None


def _weierstrass(left: Verdict, sub: Verdict) -> Verdict:
    if left.outcome == Outcome.CERTIFIED and sub.outcome == Outcome.CERTIFIED:
        return Certified(criterion=f"{left.criterion}; {sub.criterion}",
                         box=left.box,
                         depth=max(left.depth, sub.depth),
                         strict=left.strict,
                         min_lower=min(left.min_lower, sub.min_lower),
                         leaves=left.leaves + sub.leaves,
                         pair=left.pair or sub.pair)
    for v in (left, sub):
        if v.outcome == Outcome.REFUTED:
            return v
    undecided = left if left.outcome == Outcome.INCONCLUSIVE else sub
    return Inconclusive(f"lWeierstrass and Submultiplicative not both certified: {undecided.reason}", undecided.subbox)


def _timed(name: str, f: Expression, domain: DomainSpec, fn):
    start_time = time.time()
    logging.info(f"Certifying {name} for {to_text(f)} on {domain.label()}")
    result = fn()
    verdict = result[0] if isinstance(result, tuple) else result
    detail = verdict.reason if verdict.outcome == Outcome.INCONCLUSIVE else verdict.criterion
    logging.info(f"{name}: {verdict.outcome.value} ({detail}), took {round(time.time() - start_time, 2)} s.")
    return result


def classify_facts(f: Expression, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig()) -> FunctionFacts:
    """
    Verdicts for all four properties, plus the certificate (or not) of x f'(x)
    non-decreasing that the closure rules need.

    :raises NormalizationError: if f(1) != 1 or f is not certified positive on the box
    """
    _admit(f, domain, cfg)
    jets = d.JetCache(f)

    left, h = _timed(Property.L_WEIERSTRASS.value, f, domain, lambda: _left(f, domain, cfg, jets))
    right = _timed(Property.R_WEIERSTRASS.value, f, domain, lambda: _right(f, domain, cfg, jets))
    sub = _timed(Property.SUBMULTIPLICATIVE.value, f, domain,
                 lambda: _submultiplicative(f, domain, cfg, jets, right))
    both = _weierstrass(left, sub)

    verdicts = tuple(PropertyVerdict(p, v, domain) for p, v in (
        (Property.L_WEIERSTRASS, left),
        (Property.R_WEIERSTRASS, right),
        (Property.SUBMULTIPLICATIVE, sub),
        (Property.WEIERSTRASS, both),
    ))
    return FunctionFacts(expression=f, domain=domain, verdicts=verdicts, h_criterion=h)


def classify(f: Expression, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig()) -> List[PropertyVerdict]:
    """lWeierstrass, rWeierstrass, Submultiplicative and Weierstrass verdicts, in that order"""
    return list(classify_facts(f, domain, cfg).verdicts)
