# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Seeded random sweeps of the inequalities. Each harness evaluates every sample
with numpy at once and summarises the violations and the minimal slack.

A sample violates when its slack is below -tol * max(1, |lhs|, |rhs|).
"""
import logging
from typing import Callable, Tuple

import numpy as np
from scipy import special as sp

from weierstrass.constants import DEFAULT_SEED, FUZZ_SAMPLES, FUZZ_PAIR_SAMPLES, FUZZ_MAX_ARITY, \
    REPORT_TOLERANCE, REFUTATION_TOLERANCE, SANDWICH_TOLERANCE, SANDWICH_FUZZ_FLOOR
from weierstrass.datatypes import DomainKind, DomainSpec, FuzzSummary
from weierstrass.errors import DomainError
from weierstrass.expr.evaluate import eval_array
from weierstrass.expr.nodes import Expression
from weierstrass.expr.printer import to_text
from weierstrass.inequalities.checks import UV_READING, gamma_parameter_bound
from weierstrass.inequalities.inverse import Inverse

# (lhs, rhs, slack) per sample row
Sides = Tuple[np.ndarray, np.ndarray, np.ndarray]


class _Tally:
    def __init__(self, tol: float):
        self.tol = tol
        self.samples = 0
        self.violations = 0
        self.min_slack = np.inf
        self.worst: Tuple[float, ...] = ()

    def add(self, inputs: np.ndarray, sides: Sides):
        lhs, rhs, slack = sides
        keep = np.isfinite(slack)
        inputs, lhs, rhs, slack = inputs[keep], lhs[keep], rhs[keep], slack[keep]
        if len(slack) == 0:
            return
        scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
        self.samples += len(slack)
        self.violations += int(np.count_nonzero(slack < -self.tol * scale))
        i = int(np.argmin(slack))
        if slack[i] < self.min_slack:
            self.min_slack = float(slack[i])
            self.worst = tuple(float(v) for v in inputs[i])

    def summary(self, name: str, seed: int, notes=()) -> FuzzSummary:
        logging.info(f"Fuzzed {name}: {self.samples} samples, {self.violations} violations, "
                     f"minimal slack {self.min_slack:.3e}")
        return FuzzSummary(name=name, samples=self.samples, violations=self.violations,
                           min_slack=self.min_slack, worst_inputs=self.worst, seed=seed, notes=tuple(notes))


def _unit(rng: np.random.Generator, shape) -> np.ndarray:
    """Uniform on (0, 1]"""
    return 1.0 - rng.random(shape)


def _draw(domain: DomainSpec) -> Callable[[np.random.Generator, tuple], np.ndarray]:
    if domain.kind == DomainKind.UNIT:
        return _unit
    cap = domain.right_cap
    return lambda rng, shape: 1.0 + (cap - 1.0) * rng.random(shape)


def _tuples(name: str, samples: int, seed: int, draw, sides: Callable[[np.ndarray], Sides],
            tol: float = REPORT_TOLERANCE, min_n: int = 2, max_n: int = FUZZ_MAX_ARITY, notes=()) -> FuzzSummary:
    """samples tuples of arity uniform in [min_n, max_n], one numpy batch per arity"""
    rng = np.random.default_rng(seed)
    arity = rng.integers(min_n, max_n + 1, size=samples)
    tally = _Tally(tol)
    for n in range(min_n, max_n + 1):
        k = int(np.count_nonzero(arity == n))
        if k == 0:
            continue
        xs = draw(rng, (k, n))
        tally.add(xs, sides(xs))
    return tally.summary(name, seed, notes)


def _classical(a: np.ndarray) -> Sides:
    lhs = np.prod(1.0 - a, axis=1)
    rhs = 1.0 - np.sum(a, axis=1)
    return lhs, rhs, lhs - rhs


def _product_form(x: np.ndarray) -> Sides:
    lhs = np.prod(x, axis=1)
    rhs = np.sum(x, axis=1) - (x.shape[1] - 1)
    return lhs, rhs, lhs - rhs


def _log_product(x: np.ndarray) -> Sides:
    lhs = np.prod(1.0 + x, axis=1)
    rhs = 2.0 ** (x.shape[1] - 1) * (1.0 + np.prod(x, axis=1))
    return lhs, rhs, rhs - lhs


def _log_product_expanded(x: np.ndarray) -> Sides:
    x1, x2, x3 = x[:, 0], x[:, 1], x[:, 2]
    lhs = x1 * (1.0 + x2) + x2 * (1.0 + x3) + x3 * (1.0 + x1)
    rhs = 3.0 * (1.0 + x1 * x2 * x3)
    return lhs, rhs, rhs - lhs


def fuzz_classical(samples: int = FUZZ_SAMPLES, seed: int = DEFAULT_SEED) -> FuzzSummary:
    """prod(1 - a_i) >= 1 - sum(a_i) on random tuples in [0, 1), arity 2 to FUZZ_MAX_ARITY"""
    return _tuples("classical", samples, seed, lambda rng, shape: rng.random(shape), _classical)


def fuzz_product_form(domain: DomainSpec, samples: int = FUZZ_SAMPLES, seed: int = DEFAULT_SEED) -> FuzzSummary:
    return _tuples("product", samples, seed, _draw(domain), _product_form, notes=(domain.kind.value,))


def fuzz_log_product(domain: DomainSpec, samples: int = FUZZ_SAMPLES, seed: int = DEFAULT_SEED) -> FuzzSummary:
    return _tuples("logprod", samples, seed, _draw(domain), _log_product, notes=(domain.kind.value,))


def fuzz_log_product_expanded(domain: DomainSpec, samples: int = FUZZ_PAIR_SAMPLES,
                              seed: int = DEFAULT_SEED) -> FuzzSummary:
    """
    The three-variable expanded form, which also counts a sample as violating
    when its slack differs from the product form's by more than the tolerance.
    """
    rng = np.random.default_rng(seed)
    x = _draw(domain)(rng, (samples, 3))
    lhs, rhs, slack = _log_product_expanded(x)
    disagreement = np.abs(slack - _log_product(x)[2])
    scale = np.maximum(1.0, np.abs(rhs))
    disagrees = disagreement > REPORT_TOLERANCE * scale
    tally = _Tally(REPORT_TOLERANCE)
    tally.add(x, (lhs, rhs, slack))
    tally.violations += int(np.count_nonzero(disagrees & (slack >= -REPORT_TOLERANCE * scale)))
    return tally.summary("logprod-expanded", seed, notes=(
        domain.kind.value, f"largest disagreement with the product form {float(np.max(disagreement))!r}"))


def fuzz_weierstrass_chain(f: Expression, domain: DomainSpec, samples: int = FUZZ_PAIR_SAMPLES,
                           seed: int = DEFAULT_SEED) -> FuzzSummary:
    """
    sum f(x_i) - (n - 1) <= f(prod x_i) <= prod f(x_i), x_i log-uniform on the
    truncated box. Products that leave the natural domain of f are skipped.
    """
    box = domain.box()
    log_lo, log_hi = np.log(box.lo), np.log(box.hi)

    def draw(rng, shape):
        return np.exp(rng.uniform(log_lo, log_hi, shape))

    def sides(x):
        fx = eval_array(f, x)
        low = np.sum(fx, axis=1) - (x.shape[1] - 1)
        mid = eval_array(f, np.prod(x, axis=1))
        high = np.prod(fx, axis=1)
        return low, high, np.minimum(mid - low, high - mid)

    return _tuples("chain", samples, seed, draw, sides, tol=REFUTATION_TOLERANCE,
                   notes=(to_text(f), domain.kind.value))


def fuzz_sandwich(f: Expression, domain: DomainSpec, samples: int = FUZZ_PAIR_SAMPLES,
                  seed: int = DEFAULT_SEED) -> FuzzSummary:
    """
    x + y - 1 <= f(Psi(x) Psi(y)) <= x y for pairs drawn uniformly from the
    range of f on the box, cut below at SANDWICH_FUZZ_FLOOR on (0, 1].
    """
    psi = Inverse(f, domain)
    lo, hi = psi.value_range()
    if domain.kind == DomainKind.UNIT:
        lo = max(lo, SANDWICH_FUZZ_FLOOR)
    rng = np.random.default_rng(seed)
    xy = lo + (hi - lo) * _unit(rng, (samples, 2))
    x, y = xy[:, 0], xy[:, 1]
    psi_xy = psi.many(xy)
    mid = eval_array(f, psi_xy[:, 0] * psi_xy[:, 1])
    low, high = x + y - 1.0, x * y
    tally = _Tally(SANDWICH_TOLERANCE)
    tally.add(xy, (low, high, np.minimum(mid - low, high - mid)))
    return tally.summary("sandwich", seed, notes=(to_text(f), domain.kind.value, f"values in [{lo!r}, {hi!r}]"))


def _check_a(a: float, strict: bool):
    upper = gamma_parameter_bound()
    if not (0.0 < a < upper if strict else 0.0 < a <= upper):
        raise DomainError(f"gamma parameter out of range, bound x1 = {upper!r}", value=a)


def fuzz_gamma(a: float, samples: int = FUZZ_PAIR_SAMPLES, seed: int = DEFAULT_SEED) -> FuzzSummary:
    """Gamma(a x y) >= Gamma(a x) + Gamma(a y) - Gamma(a) for (x, y) uniform on (0, 1]^2"""
    _check_a(a, strict=False)
    rng = np.random.default_rng(seed)
    xy = _unit(rng, (samples, 2))
    x, y = xy[:, 0], xy[:, 1]
    lhs = sp.gamma(a * x * y)
    rhs = sp.gamma(a * x) + sp.gamma(a * y) - sp.gamma(a)
    tally = _Tally(REPORT_TOLERANCE)
    tally.add(np.column_stack([np.full(samples, a), xy]), (lhs, rhs, lhs - rhs))
    return tally.summary("gamma", seed, notes=(f"a = {a!r}",))


def fuzz_gamma_uv(a: float, samples: int = FUZZ_PAIR_SAMPLES, seed: int = DEFAULT_SEED) -> FuzzSummary:
    """Gamma(u v / a) >= Gamma(u) + Gamma(v) - Gamma(a) for (u, v) uniform on (0, a]^2"""
    _check_a(a, strict=True)
    rng = np.random.default_rng(seed)
    uv = a * _unit(rng, (samples, 2))
    u, v = uv[:, 0], uv[:, 1]
    lhs = sp.gamma(u * v / a)
    rhs = sp.gamma(u) + sp.gamma(v) - sp.gamma(a)
    tally = _Tally(REPORT_TOLERANCE)
    tally.add(np.column_stack([np.full(samples, a), uv]), (lhs, rhs, lhs - rhs))
    return tally.summary("gamma-uv", seed, notes=(f"a = {a!r}", UV_READING))
