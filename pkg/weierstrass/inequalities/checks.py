# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Point evaluators for the concrete inequalities around Weierstrass functions.

lhs and rhs are the two sides as the inequality is written, and slack is
oriented so that the inequality holds when slack >= -REPORT_TOLERANCE (a looser
tolerance where a function is evaluated).
Chains low <= mid <= high report lhs = low, rhs = high and the smaller of
the two slacks.
"""
import math
from typing import Sequence, Tuple

from weierstrass.constants import X_MIN_XTOL, REPORT_TOLERANCE, REFUTATION_TOLERANCE
from weierstrass.datatypes import DomainKind, DomainSpec, IneqReport
from weierstrass.errors import DomainError, MixedDomainError
from weierstrass.expr.evaluate import eval_point
from weierstrass.expr.nodes import Expression
from weierstrass.expr.printer import to_text
from weierstrass.special.constants import minimum_point
from weierstrass.special.gamma import gamma

UV_READING = "reads Gamma(xy/a) as Gamma(uv/a), from the substitution u = a x, v = a y"
SIN_DISPLAY_NOTE = "evaluates the printed chain; sin(pi x/4) has value sqrt(2)/2 at 1, so it is not normalised"


def input_values(xs: Sequence[float], name: str, min_n: int = 2) -> Tuple[float, ...]:
    xs = tuple(float(x) for x in xs)
    if len(xs) < min_n:
        raise DomainError(f"{name} needs at least {min_n} values, got {len(xs)}")
    for x in xs:
        if not math.isfinite(x):
            raise DomainError(f"{name} needs finite values", value=x)
    return xs


def common_domain(xs: Sequence[float]) -> DomainKind:
    """
    The interval J that holds every value: (0, 1] or [1, inf). 1 lies in both
    and counts as (0, 1] when every value is 1.

    :raises MixedDomainError: if the values straddle 1
    """
    for x in xs:
        if not x > 0.0:
            raise DomainError("values must be positive", value=x)
    if all(x <= 1.0 for x in xs):
        return DomainKind.UNIT
    if all(x >= 1.0 for x in xs):
        return DomainKind.RAY
    raise MixedDomainError(f"values {list(xs)} straddle 1, so they lie in neither (0,1] nor [1,inf)")


def _in_domain(domain: DomainSpec, xs: Sequence[float]):
    for x in xs:
        if not domain.in_domain(x):
            raise DomainError(f"value outside {domain.label()}", value=x)


def chain_report(name: str, inputs: Tuple[float, ...], low: float, mid: float, high: float,
                 notes=(), tolerance: float = REPORT_TOLERANCE) -> IneqReport:
    lower, upper = mid - low, high - mid
    return IneqReport(name=name, inputs=inputs, lhs=low, rhs=high, slack=min(lower, upper),
                      notes=tuple(notes) + (f"middle {mid!r}", f"lower slack {lower!r}", f"upper slack {upper!r}"),
                      tolerance=tolerance)


def check_classical(a: Sequence[float]) -> IneqReport:
    """prod(1 - a_i) >= 1 - sum(a_i) for a_i in (0, 1)"""
    a = input_values(a, "check_classical")
    for v in a:
        if not 0.0 < v < 1.0:
            raise DomainError("check_classical needs values in (0, 1)", value=v)
    lhs = math.prod(1.0 - v for v in a)
    rhs = 1.0 - math.fsum(a)
    return IneqReport(name="classical", inputs=a, lhs=lhs, rhs=rhs, slack=lhs - rhs)


def check_product_form(x: Sequence[float]) -> IneqReport:
    """prod(x_i) >= sum(x_i) - (n - 1), with every x_i in (0, 1] or every x_i in [1, inf)"""
    x = input_values(x, "check_product_form")
    kind = common_domain(x)
    lhs = math.prod(x)
    rhs = math.fsum(x) - (len(x) - 1)
    return IneqReport(name="product", inputs=x, lhs=lhs, rhs=rhs, slack=lhs - rhs, notes=(kind.value,))


def _log_product_domain(x: Tuple[float, ...], domain: DomainSpec = None) -> DomainKind:
    if domain is None:
        return common_domain(x)
    _in_domain(domain, x)
    return domain.kind


def check_log_product(x: Sequence[float], domain: DomainSpec = None) -> IneqReport:
    """
    prod(1 + x_i) <= 2^(n-1) (1 + prod(x_i)) for x_i all in the same J. With
    no domain given, J is inferred from the values.
    """
    x = input_values(x, "check_log_product")
    kind = _log_product_domain(x, domain)
    lhs = math.prod(1.0 + v for v in x)
    rhs = 2.0 ** (len(x) - 1) * (1.0 + math.prod(x))
    notes = [kind.value]
    if len(x) == 3:
        expanded = check_log_product_expanded(x, domain)
        notes.append(f"expanded: lhs {expanded.lhs!r}, rhs {expanded.rhs!r}, slack {expanded.slack!r}")
    return IneqReport(name="logprod", inputs=x, lhs=lhs, rhs=rhs, slack=rhs - lhs, notes=tuple(notes))


def check_log_product_expanded(x: Sequence[float], domain: DomainSpec = None) -> IneqReport:
    """The three-variable case written out: x1(1+x2) + x2(1+x3) + x3(1+x1) <= 3(1 + x1 x2 x3)"""
    x = input_values(x, "check_log_product_expanded", min_n=3)
    if len(x) != 3:
        raise DomainError(f"check_log_product_expanded needs exactly 3 values, got {len(x)}")
    kind = _log_product_domain(x, domain)
    x1, x2, x3 = x
    lhs = x1 * (1.0 + x2) + x2 * (1.0 + x3) + x3 * (1.0 + x1)
    rhs = 3.0 * (1.0 + x1 * x2 * x3)
    return IneqReport(name="logprod-expanded", inputs=x, lhs=lhs, rhs=rhs, slack=rhs - lhs, notes=(kind.value,))


def check_weierstrass_chain(f: Expression, domain: DomainSpec, xs: Sequence[float]) -> IneqReport:
    """sum f(x_i) - (n - 1) <= f(prod x_i) <= prod f(x_i)"""
    xs = input_values(xs, "check_weierstrass_chain")
    _in_domain(domain, xs)
    fx = [eval_point(f, x) for x in xs]
    low = math.fsum(fx) - (len(xs) - 1)
    mid = eval_point(f, math.prod(xs))
    high = math.prod(fx)
    return chain_report("chain", xs, low, mid, high, notes=(to_text(f), domain.kind.value),
                        tolerance=REFUTATION_TOLERANCE)


def check_sin_display(x: float, y: float) -> IneqReport:
    """x + y - 1 <= sin((4/pi) arcsin(x) arcsin(y)) <= x y, as printed"""
    x, y = input_values((x, y), "check_sin_display")
    for v in (x, y):
        if not 0.0 < v <= 1.0:
            raise DomainError("check_sin_display needs values in (0, 1]", value=v)
    mid = math.sin((4.0 / math.pi) * math.asin(x) * math.asin(y))
    return chain_report("sin", (x, y), x + y - 1.0, mid, x * y, notes=(SIN_DISPLAY_NOTE,))


def gamma_parameter_bound() -> float:
    return minimum_point() - 1.0 + X_MIN_XTOL


def check_gamma_ineq(a: float, x: float, y: float) -> IneqReport:
    """Gamma(a x y) >= Gamma(a x) + Gamma(a y) - Gamma(a) for 0 < a <= x1 and x, y in (0, 1]"""
    a, x, y = input_values((a, x, y), "check_gamma_ineq", min_n=3)
    if not 0.0 < a <= gamma_parameter_bound():
        raise DomainError(f"check_gamma_ineq needs 0 < a <= x1 = {minimum_point() - 1.0!r}", value=a)
    for v in (x, y):
        if not 0.0 < v <= 1.0:
            raise DomainError("check_gamma_ineq needs x, y in (0, 1]", value=v)
    lhs = gamma(a * x * y)
    rhs = gamma(a * x) + gamma(a * y) - gamma(a)
    return IneqReport(name="gamma", inputs=(a, x, y), lhs=lhs, rhs=rhs, slack=lhs - rhs)


def check_gamma_uv(a: float, u: float, v: float) -> IneqReport:
    """Gamma(u v / a) >= Gamma(u) + Gamma(v) - Gamma(a) for 0 < a < x1 and u, v in (0, a]"""
    a, u, v = input_values((a, u, v), "check_gamma_uv", min_n=3)
    if not 0.0 < a < gamma_parameter_bound():
        raise DomainError(f"check_gamma_uv needs 0 < a < x1 = {minimum_point() - 1.0!r}", value=a)
    for w in (u, v):
        if not 0.0 < w <= a:
            raise DomainError(f"check_gamma_uv needs u, v in (0, {a!r}]", value=w)
    lhs = gamma(u * v / a)
    rhs = gamma(u) + gamma(v) - gamma(a)
    return IneqReport(name="gamma-uv", inputs=(a, u, v), lhs=lhs, rhs=rhs, slack=lhs - rhs, notes=(UV_READING,))
