# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
The numeric inverse of a strictly monotone f on the truncated J, and the
sandwich chains built on it: x + y - 1 <= f(Psi(x) Psi(y)) <= x y.
"""
import math
from typing import Sequence, Tuple

import numpy as np
from scipy import optimize

from weierstrass.constants import SANDWICH_TOLERANCE
from weierstrass.datatypes import DomainSpec, IneqReport
from weierstrass.errors import NotMonotone, OutOfRange, ConvergenceError
from weierstrass.expr.evaluate import eval_array, eval_point
from weierstrass.expr.nodes import Expression
from weierstrass.expr.printer import to_text
from weierstrass.inequalities.checks import chain_report, input_values
from weierstrass.util import scaled_tolerance

INVERSE_XTOL = 1e-12
RANGE_TOLERANCE = 1e-12
_MONOTONE_GRID_N = 257
_MAX_HALVINGS = 200


class Inverse:
    """
    Psi, the inverse of f over the truncated box of J. Strict monotonicity is
    checked once, on a geometric grid, at construction.

    :raises NotMonotone: if f is not strictly monotone on the grid
    """

    def __init__(self, f: Expression, domain: DomainSpec):
        self.f = f
        self.domain = domain
        box = domain.box()
        self.lo, self.hi = box.lo, box.hi

        values = eval_array(f, np.geomspace(self.lo, self.hi, _MONOTONE_GRID_N))
        if not np.all(np.isfinite(values)):
            raise NotMonotone(f"{to_text(f)} is not finite everywhere on {domain.label()}")
        steps = np.diff(values)
        if not (np.all(steps > 0) or np.all(steps < 0)):
            raise NotMonotone(f"{to_text(f)} is not strictly monotone on {domain.label()}")

        self.f_lo = eval_point(f, self.lo)
        self.f_hi = eval_point(f, self.hi)

    def __call__(self, y: float) -> float:
        y = float(y)
        for x, fx in ((self.lo, self.f_lo), (self.hi, self.f_hi)):
            if abs(fx - y) <= scaled_tolerance(RANGE_TOLERANCE, y):
                return x
        lo_y, hi_y = self.value_range()
        if not lo_y < y < hi_y:
            raise OutOfRange(f"{y!r} is outside the range [{lo_y!r}, {hi_y!r}] "
                             f"of {to_text(self.f)} on {self.domain.label()}")

        root, result = optimize.bisect(lambda x: eval_point(self.f, x) - y, self.lo, self.hi,
                                       xtol=INVERSE_XTOL, full_output=True, disp=False)
        if not result.converged:
            raise ConvergenceError(f"Inverting {to_text(self.f)} at {y!r} did not converge: {result.flag}")
        return root

    def value_range(self) -> Tuple[float, float]:
        return min(self.f_lo, self.f_hi), max(self.f_lo, self.f_hi)

    def many(self, ys: np.ndarray) -> np.ndarray:
        """Psi over an array of values in the range, by bisection of every element at once"""
        ys = np.asarray(ys, dtype=np.float64)
        lo_y, hi_y = self.value_range()
        if np.any(ys < lo_y - scaled_tolerance(RANGE_TOLERANCE, lo_y)) or \
                np.any(ys > hi_y + scaled_tolerance(RANGE_TOLERANCE, hi_y)):
            raise OutOfRange(f"values outside the range [{lo_y!r}, {hi_y!r}] of {to_text(self.f)}")
        increasing = self.f_hi > self.f_lo
        lo = np.full(ys.shape, self.lo)
        hi = np.full(ys.shape, self.hi)
        for _ in range(_MAX_HALVINGS):
            if np.all(hi - lo <= INVERSE_XTOL):
                break
            mid = 0.5 * (lo + hi)
            below = (eval_array(self.f, mid) < ys) == increasing
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return 0.5 * (lo + hi)


def invert_numeric(f: Expression, domain: DomainSpec, y: float) -> float:
    """Psi(y), with f(Psi(y)) = y to within the bisection tolerance"""
    return Inverse(f, domain)(y)


def check_sandwich(f: Expression, domain: DomainSpec, x: float, y: float, inverse: Inverse = None) -> IneqReport:
    """x + y - 1 <= f(Psi(x) Psi(y)) <= x y"""
    x, y = input_values((x, y), "check_sandwich")
    psi = inverse if inverse is not None else Inverse(f, domain)
    mid = eval_point(f, psi(x) * psi(y))
    return chain_report("sandwich", (x, y), x + y - 1.0, mid, x * y, notes=(to_text(f), domain.kind.value),
                        tolerance=SANDWICH_TOLERANCE)


def check_sandwich_chain(f: Expression, domain: DomainSpec, xs: Sequence[float]) -> IneqReport:
    """sum x_i - (n - 1) <= f(prod Psi(x_i)) <= prod x_i"""
    xs = input_values(xs, "check_sandwich_chain")
    psi = Inverse(f, domain)
    mid = eval_point(f, math.prod(psi(x) for x in xs))
    return chain_report("sandwich-chain", xs, math.fsum(xs) - (len(xs) - 1), mid, math.prod(xs),
                        notes=(to_text(f), domain.kind.value), tolerance=SANDWICH_TOLERANCE)
