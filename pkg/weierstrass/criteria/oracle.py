# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from typing import Optional

import numpy as np

from weierstrass.constants import ORACLE_GRID_N, REFUTATION_TOLERANCE
from weierstrass.criteria.pairs import SIDE_OF, sides
from weierstrass.criteria.search import witness_at
from weierstrass.datatypes import DomainSpec, Property, Witness
from weierstrass.expr.evaluate import eval_array
from weierstrass.expr.nodes import Expression


def grid_oracle(f: Expression, domain: DomainSpec, prop: Property, n: int = ORACLE_GRID_N,
                tol: float = REFUTATION_TOLERANCE) -> Optional[Witness]:
    """
    Direct check of the defining inequality on an evenly spaced n x n grid of
    the truncated J x J, independent of every certificate. Returns the worst
    violation beyond tol (scaled by max(1, |lhs|, |rhs|)), or None.
    Weierstrass checks both the left and the submultiplicative inequality.
    """
    if prop == Property.WEIERSTRASS:
        for p in (Property.L_WEIERSTRASS, Property.SUBMULTIPLICATIVE):
            w = grid_oracle(f, domain, p, n, tol)
            if w is not None:
                return w
        return None

    side = SIDE_OF[prop]
    box = domain.box()
    xs = np.linspace(box.lo, box.hi, n)
    fx = eval_array(f, xs)
    lhs, rhs = sides(side, fx[:, None], fx[None, :], eval_array(f, np.outer(xs, xs)))
    excess = (lhs - rhs) - tol * np.maximum(1.0, np.maximum(np.abs(lhs), np.abs(rhs)))
    excess = np.where(np.isnan(excess), -np.inf, excess)
    i, j = np.unravel_index(np.argmax(excess), excess.shape)
    if excess[i, j] <= 0.0:
        return None
    return witness_at(f, side, float(xs[i]), float(xs[j]))
