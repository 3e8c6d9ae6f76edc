# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Interval branch-and-bound sign certificates, for one-variable quantities
q(x) >= 0 on a box and for the two-variable inequalities phi(x, y) >= 0 on a
square box. Subdivision is breadth first, so a sign failure on a large box is
met before the engine goes deep anywhere else.
"""
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Callable, Optional

from weierstrass.config import CertifyConfig
from weierstrass.criteria.derivatives import JetCache, value_of, derivative_of
from weierstrass.criteria.pairs import Side, PairForms
from weierstrass.datatypes import Certified, DomainSpec, Inconclusive, Verdict
from weierstrass.errors import DomainError
from weierstrass.expr.nodes import Expression
from weierstrass.interval.interval import Interval
from weierstrass.util import Deadline

PAIR_CRITERION = "two-variable subdivision"


@dataclass(frozen=True)
class Quantity:
    """A one-variable quantity q with enclosures of q and, optionally, of dq/dx"""
    name: str
    value: Callable[[Interval], Interval]
    slope: Optional[Callable[[Interval], Interval]] = None

    @classmethod
    def of(cls, name: str, f: Expression, value_of, slope_of=None, jets: JetCache = None) -> 'Quantity':
        """Binds one of the `*_of` functions of criteria.derivatives to f"""
        jets = jets if jets is not None else JetCache(f)
        return cls(
            name,
            lambda x: value_of(f, x, jets),
            (lambda x: slope_of(f, x, jets)) if slope_of is not None else None)

    def negated(self) -> 'Quantity':
        value, slope = self.value, self.slope
        return Quantity(
            f"-({self.name})",
            lambda x: -value(x),
            (lambda x: -slope(x)) if slope is not None else None)


def split(x: Interval):
    """Geometric bisection for boxes spanning more than a factor 2, midpoint otherwise"""
    if x.lo > 0.0 and x.hi > 2.0 * x.lo:
        m = math.sqrt(x.lo) * math.sqrt(x.hi)
        return Interval(x.lo, m), Interval(m, x.hi)
    return x.bisect()


def _box(x: Interval):
    return x.lo, x.hi


def _lower_bound(q: Quantity, x: Interval) -> Interval:
    """The tightest enclosure of q over x the available forms give"""
    naive = q.value(x)
    if naive.lo > 0.0 or q.slope is None or x.is_degenerate():
        return naive
    slope = q.slope(x)
    if slope.lo >= 0.0:
        form = q.value(Interval.point(x.lo))
    elif slope.hi <= 0.0:
        form = q.value(Interval.point(x.hi))
    else:
        m = Interval.point(x.mid())
        form = q.value(m) + slope * (x - m)
    lo = max(naive.lo, form.lo)
    return Interval(lo, max(lo, min(naive.hi, form.hi)))


def certify_sign(q: Quantity, box: Interval, cfg: CertifyConfig = CertifyConfig(),
                 deadline: Deadline = None, strict: bool = False, criterion: str = None) -> Verdict:
    """
    Certifies q >= 0 on `box` by subdivision. A leaf is accepted when its
    enclosure lower bound is >= -certify_tol; the certificate is strict when every
    leaf had lower bound > 0. With strict=True only lower bounds > 0 are accepted.

    Returns Inconclusive with the subbox when q is provably negative somewhere
    ("sign failure"), or when the depth or time limits are reached.
    """
    deadline = deadline if deadline is not None else Deadline(cfg.time_budget_s)
    tol = 0.0 if strict else cfg.certify_tol
    criterion = criterion if criterion is not None else f"{q.name} >= 0"

    queue = deque([(box, 0)])
    leaves = 0
    max_depth = 0
    min_lower = math.inf
    all_strict = True
    while queue:
        x, depth = queue.popleft()
        max_depth = max(max_depth, depth)
        if deadline.expired():
            return Inconclusive("time budget exhausted", _box(x))
        try:
            enclosure = _lower_bound(q, x)
        except DomainError as e:
            if depth >= cfg.max_depth or x.is_degenerate():
                raise e.with_node(q.name)
            queue.extend((half, depth + 1) for half in split(x))
            continue

        if enclosure.hi < -tol:
            return Inconclusive("sign failure", _box(x))
        if enclosure.lo > 0.0 or (not strict and enclosure.lo >= -tol):
            leaves += 1
            min_lower = min(min_lower, enclosure.lo)
            all_strict = all_strict and enclosure.lo > 0.0
            continue
        if depth >= cfg.max_depth or x.is_degenerate():
            return Inconclusive("maximum depth reached", _box(x))
        queue.extend((half, depth + 1) for half in split(x))

    logging.debug(f"{criterion}: {leaves} leaves, depth {max_depth}, min lower bound {min_lower:.3g}")
    return Certified(criterion=criterion, box=_box(box), depth=max_depth,
                     strict=all_strict, min_lower=min_lower, leaves=leaves)


def _log_extent(x: Interval) -> float:
    return math.log(x.hi / x.lo) if x.lo > 0.0 else x.width()


def _pair_enclosure(forms: PairForms, x: Interval, y: Interval, tol: float) -> Interval:
    """
    Tries the naive, mean-value, monotonicity and corner forms in turn, stopping
    once one proves phi > 0. Returns [best lower bound, best upper bound].
    """
    naive = forms.naive(x, y)
    lo, hi = naive.lo, naive.hi
    if lo > 0.0 or hi < -tol:
        return Interval(lo, max(lo, hi))

    gx, gy = forms.gradient(x, y)
    mean = forms.mean_value(x, y, gx, gy)
    lo, hi = max(lo, mean.lo), min(hi, mean.hi)
    if lo > 0.0:
        return Interval(lo, max(lo, hi))

    face = forms.monotone(x, y, gx, gy)
    if face is not None:
        lo = max(lo, face.lo)
        if lo > 0.0:
            return Interval(lo, max(lo, hi))

    corner = forms.corner(x, y)
    lo, hi = max(lo, corner.lo), min(hi, corner.hi)
    return Interval(lo, max(lo, hi))


def certify_pair_inequality(f: Expression, box: Interval, side: Side, cfg: CertifyConfig = CertifyConfig(),
                            deadline: Deadline = None, jets: JetCache = None) -> Verdict:
    """
    Certifies phi(x, y) >= 0 on box x box for one of the two-variable
    inequalities. Boxes with x < y throughout are dropped (phi is symmetric).
    Each box is split on the side with the larger logarithmic extent.
    """
    deadline = deadline if deadline is not None else Deadline(cfg.time_budget_s)
    jets = jets if jets is not None else JetCache(f)
    forms = PairForms(side, jets)
    tol = cfg.certify_tol

    queue = deque([(box, box, 0)])
    leaves = 0
    max_depth = 0
    min_lower = math.inf
    all_strict = True
    while queue:
        x, y, depth = queue.popleft()
        if x.hi < y.lo:
            continue
        max_depth = max(max_depth, depth)
        if deadline.expired():
            return Inconclusive("time budget exhausted", (_box(x), _box(y)))
        try:
            enclosure = _pair_enclosure(forms, x, y, tol)
        except DomainError:
            if depth >= cfg.max_depth:
                raise
            enclosure = None

        if enclosure is not None:
            if enclosure.hi < -tol:
                return Inconclusive("violated on subbox", (_box(x), _box(y)))
            if enclosure.lo >= -tol:
                leaves += 1
                min_lower = min(min_lower, enclosure.lo)
                all_strict = all_strict and enclosure.lo > 0.0
                continue
            if depth >= cfg.max_depth:
                return Inconclusive("maximum depth reached", (_box(x), _box(y)))

        if _log_extent(x) >= _log_extent(y):
            queue.extend((half, y, depth + 1) for half in split(x))
        else:
            queue.extend((x, half, depth + 1) for half in split(y))

    logging.debug(f"{PAIR_CRITERION} ({side.value}): {leaves} leaves, depth {max_depth}, "
                  f"min lower bound {min_lower:.3g}")
    return Certified(criterion=PAIR_CRITERION, box=_box(box), depth=max_depth,
                     strict=all_strict, min_lower=min_lower, leaves=leaves, pair=True)


def certify_on_products(q: Quantity, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig(),
                        deadline: Deadline = None, strict: bool = False, criterion: str = None) -> Verdict:
    """
    certify_sign over the range of xy, the box a one-variable criterion for the
    product inequalities has to hold on. A quantity undefined somewhere on that
    range is not certified.
    """
    products = domain.product_box()
    try:
        return certify_sign(q, products, cfg, deadline, strict, criterion)
    except DomainError as e:
        return Inconclusive(f"undefined on the range of xy: {e}", _box(products))


def certify_positive_on_products(f: Expression, domain: DomainSpec, cfg: CertifyConfig = CertifyConfig(),
                                 deadline: Deadline = None, jets: JetCache = None) -> Verdict:
    return certify_on_products(Quantity.of("f", f, value_of, derivative_of, jets), domain, cfg, deadline,
                               strict=True, criterion="f > 0 on the range of xy")
