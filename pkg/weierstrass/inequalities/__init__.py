# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.inequalities.checks import check_classical, check_product_form, check_log_product, \
    check_log_product_expanded, check_weierstrass_chain, check_sin_display, check_gamma_ineq, check_gamma_uv, \
    common_domain
from weierstrass.inequalities.inverse import Inverse, invert_numeric, check_sandwich, check_sandwich_chain
from weierstrass.inequalities.fuzz import fuzz_classical, fuzz_product_form, fuzz_log_product, \
    fuzz_log_product_expanded, fuzz_weierstrass_chain, fuzz_sandwich, fuzz_gamma, fuzz_gamma_uv
from weierstrass.inequalities.registry import NAMES, check_named, fuzz_named
