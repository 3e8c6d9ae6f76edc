# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.special.gamma import gamma, lngamma, digamma, trigamma, tetragamma, gamma_a
from weierstrass.special.constants import GammaConstants, compute_x_min, compute_xi, get_constants, series_s
