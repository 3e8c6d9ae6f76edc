# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from weierstrass.interval.interval import Interval, as_interval
from weierstrass.interval.jet import Jet2, Jet3
