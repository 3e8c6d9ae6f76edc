# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.

# Truncation of (0,1] to [DEFAULT_DELTA, 1] and of [1, inf) to [1, DEFAULT_CAP].
# Many candidate functions are singular at 0, so no certificate can reach it.
DEFAULT_DELTA = 1e-6
DEFAULT_CAP = 10.0

# Branch-and-bound limits, per property:
DEFAULT_MAX_DEPTH = 40
DEFAULT_TIME_BUDGET_S = 5.0

# Counterexample search grid (per axis) and rounds of local ternary refinement:
DEFAULT_GRID_N = 512
DEFAULT_REFINE_ROUNDS = 3

# Size of the dense grid used by the independent oracle check:
ORACLE_GRID_N = 500

# A witness only counts if it violates its inequality by more than this,
# scaled by max(1, |lhs|, |rhs|):
REFUTATION_TOLERANCE = 1e-9

# A leaf at maximum depth (or a reduced corner point) is accepted when the lower
# bound of its enclosure is at least -CERTIFY_TOLERANCE. Such certificates are
# recorded as non-strict.
CERTIFY_TOLERANCE = 1e-9

# f(1) must be within this of 1 for classification:
NORMALIZATION_TOLERANCE = 1e-9

# Inequality reports hold when slack >= -REPORT_TOLERANCE:
REPORT_TOLERANCE = 1e-12

# Outward widening per interval operation, relative (in machine epsilons) and absolute:
INTERVAL_WIDEN_EPS = 4
INTERVAL_WIDEN_FLOOR = 1e-300

# Certified relative error of the point gamma family, used for interval enclosures:
GAMMA_REL_ERROR = 1e-11

EULER_GAMMA = 0.57721566490153286061

# Digamma root bracket and tolerance:
X_MIN_BRACKET = (1.0, 2.0)
X_MIN_XTOL = 1e-12

# Series for xi: bracket, number of terms (tail < 1e-9 for x <= 0.4) and tolerance:
XI_BRACKET = (0.1, 0.4)
XI_SERIES_TERMS = 100_000
XI_XTOL = 1e-12

# Default fuzzing sizes and seed:
DEFAULT_SEED = 0
FUZZ_SAMPLES = 100_000
FUZZ_PAIR_SAMPLES = 10_000
FUZZ_MAX_ARITY = 8

# Gamma-family parameters swept by the catalog and acceptance suites:
GAMMA_SWEEP = (0.1, 0.2, 0.3, 0.4, 0.4616)

REPORT_SCHEMA_VERSION = "1.0"

# Sandwich chains go through a numeric inverse, so they hold when slack >= -SANDWICH_TOLERANCE.
# Fuzzed sandwich values on (0,1] are drawn from [SANDWICH_FUZZ_FLOOR, 1].
SANDWICH_TOLERANCE = 1e-10
SANDWICH_FUZZ_FLOOR = 1e-3
