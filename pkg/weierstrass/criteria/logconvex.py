# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
A second sufficient condition for the left inequality: f log-convex with f and
x f(x) both decreasing, or both increasing, on the range of xy for x, y in J.
"""
from weierstrass.config import CertifyConfig
from weierstrass.criteria import derivatives as d
from weierstrass.criteria.certify import Quantity, certify_on_products, certify_positive_on_products
from weierstrass.datatypes import DomainSpec, Certified, Inconclusive, Outcome, Verdict
from weierstrass.expr.evaluate import eval_jet2
from weierstrass.expr.nodes import Expression
from weierstrass.util import Deadline

LOGCONVEX_CRITERION = "log-convex with f and x f monotone alike"


def certify_logconvex_pair(f: Expression, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig(),
                           deadline: Deadline = None, jets: d.JetCache = None) -> Verdict:
    deadline = deadline if deadline is not None else Deadline(cfg.time_budget_s)
    jets = jets if jets is not None else d.JetCache(f)
    box = domain.product_box()

    positive = certify_positive_on_products(f, domain, cfg, deadline, jets)
    if positive.outcome != Outcome.CERTIFIED:
        return Inconclusive(f"f not certified positive on the range of xy: {positive.reason}", positive.subbox)
    convex = certify_on_products(Quantity.of("f'' f - f'^2", f, d.logconvex_of, d.logconvex_slope_of, jets),
                                 domain, cfg, deadline)
    if convex.outcome != Outcome.CERTIFIED:
        return Inconclusive(f"log-convexity not certified: {convex.reason}", convex.subbox)

    slope = eval_jet2(f, box.mid()).d1
    if slope == 0.0:
        return Inconclusive("f is stationary at the middle of the box", (box.lo, box.hi))
    direction = "decreasing" if slope < 0.0 else "increasing"

    derivative = Quantity.of("f'", f, d.derivative_of, d.second_derivative_of, jets)
    xf = Quantity.of("(x f)'", f, d.xf_derivative_of, d.xf_derivative_slope_of, jets)
    if slope < 0.0:
        derivative, xf = derivative.negated(), xf.negated()

    certificates = [convex]
    for q, what in ((derivative, "f"), (xf, "x f")):
        c = certify_on_products(q, domain, cfg, deadline)
        if c.outcome != Outcome.CERTIFIED:
            return Inconclusive(f"{what} not certified {direction}: {c.reason}", c.subbox)
        certificates.append(c)

    return Certified(criterion=LOGCONVEX_CRITERION,
                     box=(box.lo, box.hi),
                     depth=max(c.depth for c in certificates),
                     strict=all(c.strict for c in certificates),
                     min_lower=min(c.min_lower for c in certificates),
                     leaves=sum(c.leaves for c in certificates))
