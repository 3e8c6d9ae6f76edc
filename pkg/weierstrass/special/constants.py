# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import logging
import math
from dataclasses import dataclass, asdict
from functools import lru_cache
from typing import Tuple

import numpy as np
from scipy import optimize

from weierstrass.constants import EULER_GAMMA, X_MIN_BRACKET, X_MIN_XTOL, XI_BRACKET, \
    XI_SERIES_TERMS, XI_XTOL
from weierstrass.errors import ConvergenceError
from weierstrass.special.gamma import digamma


@dataclass(frozen=True)
class GammaConstants:
    """The numeric constants of the gamma family, with the accuracy achieved"""
    euler_gamma: float
    x_min: float
    x1: float
    xi: float
    x_min_tolerance: float
    xi_error: float
    series_terms: int
    euler_gamma_crosscheck: float

    def to_dict(self) -> dict:
        return asdict(self)


def _bisect(fn, lo: float, hi: float, xtol: float, what: str) -> float:
    root, result = optimize.bisect(fn, lo, hi, xtol=xtol, full_output=True, disp=False)
    if not result.converged:
        raise ConvergenceError(f"Bisection for {what} did not converge: {result.flag}")
    return root


def compute_x_min() -> Tuple[float, float]:
    """
    :return: (x_min, x1): the positive minimizer of Gamma, which is the root of
    digamma in [1, 2] (digamma(1) = -euler_gamma < 0 < digamma(2) = 1 - euler_gamma),
    and x1 = x_min - 1.
    """
    lo, hi = X_MIN_BRACKET
    x_min = _bisect(digamma, lo, hi, X_MIN_XTOL, "x_min")
    return x_min, x_min - 1.0


@lru_cache(maxsize=None)
def minimum_point() -> float:
    """Cached x_min, needed by every interval gamma enclosure"""
    return compute_x_min()[0]


def series_s(x: float, terms: int = XI_SERIES_TERMS) -> float:
    """
    Partial sum of S(x) = sum_{n>=1} (2nx + x^2) / (n (n+x)^2) over the first `terms` terms.
    The partial sum is a lower bound of S(x) for x > 0.
    """
    n = np.arange(1, terms + 1, dtype=np.float64)
    return float(np.sum((2.0 * n * x + x * x) / (n * (n + x) ** 2)))


def series_tail_bound(x: float, terms: int = XI_SERIES_TERMS) -> float:
    """Crude bound: each term is at most (2x + x^2)/n^2, and sum_{n>N} 1/n^2 <= 1/N"""
    return (2.0 * x + x * x) / terms


def _tail_integral(x: float, start: float) -> float:
    # integral from `start` to inf of 1/t - 1/(t+x) + x/(t+x)^2, which is the n-th term
    return math.log1p(x / start) + x / (start + x)


def series_s_bounds(x: float, terms: int = XI_SERIES_TERMS) -> Tuple[float, float]:
    """
    Rigorous enclosure of S(x). The terms decrease in n, so the tail after N
    terms lies between the integrals of the term from N+1 and from N to infinity.
    Both are tighter than `series_tail_bound`.
    """
    s = series_s(x, terms)
    return s + _tail_integral(x, terms + 1.0), s + min(_tail_integral(x, float(terms)),
                                                      series_tail_bound(x, terms))


def xi_bracket(terms: int = XI_SERIES_TERMS) -> Tuple[float, float]:
    """
    Bracket [lo, hi] of the root of S(x) = euler_gamma. `hi` solves
    lower bound of S = euler_gamma, `lo` solves upper bound of S = euler_gamma.
    """
    lo, hi = XI_BRACKET
    s_lo = series_s_bounds(lo, terms)[1]
    s_hi = series_s_bounds(hi, terms)[0]
    if not s_lo < EULER_GAMMA < s_hi:
        raise ConvergenceError(
            f"S does not straddle euler_gamma on [{lo}, {hi}]: S({lo}) <= {s_lo}, S({hi}) >= {s_hi}")

    root_hi = _bisect(lambda x: series_s_bounds(x, terms)[0] - EULER_GAMMA, lo, hi, XI_XTOL, "xi")
    root_lo = _bisect(lambda x: series_s_bounds(x, terms)[1] - EULER_GAMMA, lo, hi, XI_XTOL, "xi")
    return root_lo, root_hi


def compute_xi(terms: int = XI_SERIES_TERMS) -> float:
    root_lo, root_hi = xi_bracket(terms)
    return 0.5 * (root_lo + root_hi)


@lru_cache(maxsize=None)
def get_constants() -> GammaConstants:
    """
    Compute the constants once. Cross-checks the stored euler_gamma against
    -digamma(1), which catches digamma errors.
    """
    crosscheck = abs(EULER_GAMMA + digamma(1.0))
    if crosscheck >= 1e-10:
        raise ConvergenceError(f"euler_gamma cross-check failed: |gamma + digamma(1)| = {crosscheck}")

    x_min, x1 = compute_x_min()
    root_lo, root_hi = xi_bracket(XI_SERIES_TERMS)
    xi = 0.5 * (root_lo + root_hi)
    constants = GammaConstants(
        euler_gamma=EULER_GAMMA,
        x_min=x_min,
        x1=x1,
        xi=xi,
        x_min_tolerance=X_MIN_XTOL,
        xi_error=0.5 * (root_hi - root_lo) + XI_XTOL,
        series_terms=XI_SERIES_TERMS,
        euler_gamma_crosscheck=crosscheck)
    logging.info(f"Constants: x_min={x_min:.12f}, x1={x1:.12f}, xi={xi:.10f} "
                 f"(+/- {constants.xi_error:.1e}), |gamma + digamma(1)|={crosscheck:.1e}")
    return constants
