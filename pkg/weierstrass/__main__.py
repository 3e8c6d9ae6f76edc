# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import sys

from weierstrass.cli import main

sys.exit(main())
