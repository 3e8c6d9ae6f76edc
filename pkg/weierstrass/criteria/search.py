# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import logging
from typing import Optional, Tuple

import numpy as np

from weierstrass.config import CertifyConfig
from weierstrass.criteria.pairs import Side, sides
from weierstrass.datatypes import DomainSpec, Witness
from weierstrass.errors import DomainError
from weierstrass.expr.evaluate import eval_array, eval_point
from weierstrass.expr.nodes import Expression
from weierstrass.util import scaled_tolerance

# Points per side of the local grids used to refine the worst grid point
_REFINE_N = 9


def _margins(f: Expression, side: Side, xs: np.ndarray, ys: np.ndarray, tol: float) -> np.ndarray:
    """
    lhs - rhs minus the scaled tolerance over the grid xs x ys. Positive
    entries are violations; points outside the domain of f are -inf.
    """
    fx = eval_array(f, xs)[:, None]
    fy = eval_array(f, ys)[None, :]
    fxy = eval_array(f, np.outer(xs, ys))
    lhs, rhs = sides(side, fx, fy, fxy)
    scale = np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    m = (lhs - rhs) - tol * scale
    return np.where(np.isnan(m), -np.inf, m)


def _argmax(m: np.ndarray) -> Tuple[int, int]:
    i, j = np.unravel_index(np.argmax(m), m.shape)
    return int(i), int(j)


def _refine(f: Expression, side: Side, x: float, y: float, lo: float, hi: float,
            step: float, rounds: int, tol: float) -> Tuple[float, float]:
    """Ternary-style descent: re-grid around the best point, shrinking the log step by 3 each round"""
    for _ in range(rounds):
        xs = np.clip(x * np.exp(np.linspace(-step, step, _REFINE_N)), lo, hi)
        ys = np.clip(y * np.exp(np.linspace(-step, step, _REFINE_N)), lo, hi)
        m = _margins(f, side, xs, ys, tol)
        i, j = _argmax(m)
        if np.isfinite(m[i, j]):
            x, y = float(xs[i]), float(ys[j])
        step /= 3.0
    return x, y


def witness_at(f: Expression, side: Side, x: float, y: float) -> Witness:
    lhs, rhs = sides(side, eval_point(f, x), eval_point(f, y), eval_point(f, x * y))
    return Witness(x=x, y=y, lhs=lhs, rhs=rhs, margin=lhs - rhs)


def search_counterexample(f: Expression, domain: DomainSpec, side: Side,
                          cfg: CertifyConfig = CertifyConfig()) -> Optional[Witness]:
    """
    Scans a log-spaced grid_n x grid_n grid over the truncated J x J for the
    point where the chosen inequality is least satisfied, refines around it and
    returns it as a witness if, re-evaluated pointwise, it violates the
    inequality by more than the scaled refutation tolerance.
    """
    box = domain.box()
    xs = np.geomspace(box.lo, box.hi, cfg.grid_n)
    m = _margins(f, side, xs, xs, cfg.refutation_tol)
    i, j = _argmax(m)
    if not np.isfinite(m[i, j]):
        logging.debug(f"search ({side.value}): f undefined on the whole grid")
        return None

    step = np.log(box.hi / box.lo) / (cfg.grid_n - 1)
    x, y = _refine(f, side, float(xs[i]), float(xs[j]), box.lo, box.hi, step,
                   cfg.refine_rounds, cfg.refutation_tol)
    try:
        witness = witness_at(f, side, x, y)
    except DomainError:
        return None
    if witness.margin > scaled_tolerance(cfg.refutation_tol, witness.lhs, witness.rhs):
        logging.debug(f"search ({side.value}): witness ({x:.6g}, {y:.6g}) margin {witness.margin:.3g}")
        return witness
    return None
