# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.criteria.derivatives import h_of, g_of, JetCache
from weierstrass.criteria.certify import Quantity, certify_sign, certify_pair_inequality
from weierstrass.criteria.pairs import Side, SIDE_OF
from weierstrass.criteria.search import search_counterexample
from weierstrass.criteria.logconvex import certify_logconvex_pair
from weierstrass.criteria.classify import classify, classify_facts, check_normalization
from weierstrass.criteria.closure import closure_product, closure_compose, closure_power
from weierstrass.criteria.oracle import grid_oracle
