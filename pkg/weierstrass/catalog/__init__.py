# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.catalog.entries import catalog, catalog_ids
from weierstrass.catalog.run import run_catalog, run_case
