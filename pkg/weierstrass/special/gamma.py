# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Gamma, log-gamma, digamma, trigamma and tetragamma for positive real arguments.

Gamma uses the Lanczos approximation with g = 7 and 9 coefficients (with the
reflection formula below 1/2); the polygamma functions shift the argument up
with the recurrence and finish with the asymptotic series.
"""
import math

from weierstrass.errors import DomainError

_LANCZOS_G = 7
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LN_TWO_PI = 0.5 * math.log(2.0 * math.pi)

# Above this, Gamma overflows a double:
GAMMA_MAX_ARG = 171.6

# The asymptotic series are used from here up:
_ASYMPTOTIC_FROM = 10.0

# Bernoulli-number coefficients, k = 1..7: B_2k / (2k) for digamma, B_2k for
# trigamma and (2k + 1) B_2k for tetragamma
_DIGAMMA_SERIES = (1 / 12, -1 / 120, 1 / 252, -1 / 240, 1 / 132, -691 / 32760, 1 / 12)
_TRIGAMMA_SERIES = (1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730, 7 / 6)
_TETRAGAMMA_SERIES = (1 / 2, -1 / 6, 1 / 6, -3 / 10, 5 / 6, -691 / 210, 35 / 2)


def _check_positive(x: float, name: str):
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"{name} requires a positive finite argument", node=name, value=x)


def _lanczos_sum(z: float) -> float:
    a = _LANCZOS_COEFFS[0]
    for i in range(1, len(_LANCZOS_COEFFS)):
        a += _LANCZOS_COEFFS[i] / (z + i)
    return a


def gamma(x: float) -> float:
    _check_positive(x, "gamma")
    if x > GAMMA_MAX_ARG:
        raise DomainError("gamma overflows", node="gamma", value=x)
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * _lanczos_sum(z)


def lngamma(x: float) -> float:
    _check_positive(x, "lngamma")
    if x <= 100.0:
        return math.log(gamma(x))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _HALF_LN_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def digamma(x: float) -> float:
    _check_positive(x, "digamma")
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for c in _DIGAMMA_SERIES:
        series += c * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


def trigamma(x: float) -> float:
    _check_positive(x, "trigamma")
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift += 1.0 / (x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    power = inv2 * inv
    for c in _TRIGAMMA_SERIES:
        series += c * power
        power *= inv2
    return shift + inv + 0.5 * inv2 + series


def tetragamma(x: float) -> float:
    """The second derivative of digamma; negative and increasing on (0, inf)"""
    _check_positive(x, "tetragamma")
    shift = 0.0
    while x < _ASYMPTOTIC_FROM:
        shift -= 2.0 / (x * x * x)
        x += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    series = 0.0
    power = inv2 * inv2
    for c in _TETRAGAMMA_SERIES:
        series += c * power
        power *= inv2
    return shift - inv2 - inv2 * inv - series


def gamma_a(a: float, x: float) -> float:
    """The normalized slice Gamma(a x) / Gamma(a); equal to 1 at x = 1"""
    _check_positive(a, "gamma_a")
    _check_positive(x, "gamma_a")
    if x == 1.0:
        return 1.0
    return gamma(a * x) / gamma(a)
