# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
The named examples with their expected verdicts. The gamma entries depend on
the computed constants xi and x1, so the catalog is built on first use.
"""
from functools import lru_cache
from typing import Tuple

from weierstrass.datatypes import CatalogEntry, CatalogCase, Expectation, DomainSpec, Property, Outcome
from weierstrass.expr.nodes import gamma_a_expression
from weierstrass.expr.printer import to_text
from weierstrass.special.constants import get_constants

L, R, SM, W = Property.L_WEIERSTRASS, Property.R_WEIERSTRASS, Property.SUBMULTIPLICATIVE, Property.WEIERSTRASS
CERTIFIED, REFUTED, INCONCLUSIVE = Outcome.CERTIFIED, Outcome.REFUTED, Outcome.INCONCLUSIVE

UNIT = DomainSpec.unit()
RAY = DomainSpec.ray()

GAMMA_BEYOND_A = 0.6


def _gamma_case(label: str, a: float, expected) -> CatalogCase:
    return CatalogCase(label=label, expression=to_text(gamma_a_expression(a)), domain=UNIT, expected=tuple(expected))


@lru_cache(maxsize=None)
def catalog() -> Tuple[CatalogEntry, ...]:
    constants = get_constants()
    fully_weierstrass = (Expectation(L, CERTIFIED), Expectation(SM, CERTIFIED), Expectation(W, CERTIFIED))
    left_only = (Expectation(L, CERTIFIED), Expectation(SM, REFUTED), Expectation(W, REFUTED))

    return (
        CatalogEntry(
            id="identity",
            provenance="introduction: the identity function is a Weierstrass function",
            cases=(
                CatalogCase("unit", "x", UNIT, (Expectation(W, CERTIFIED),)),
                CatalogCase("ray", "x", RAY, (Expectation(W, CERTIFIED),)),
            )),
        CatalogEntry(
            id="arctan",
            provenance="(4/pi) arctan x has the left Weierstrass property on (0,1]",
            cases=(
                CatalogCase("unit", "(4/pi)*arctan(x)", UNIT, fully_weierstrass),
            )),
        CatalogEntry(
            id="sin-printed",
            provenance="sin(pi x/4) as printed, with its chain x + y - 1 <= sin((4/pi) arcsin x arcsin y) <= x y",
            cases=(
                CatalogCase("unit", "sin(pi*x/4)", UNIT, normalization_fails=True),
            ),
            note="erratum: f(1) = sin(pi/4) = 0.70711, so the function is not normalised"),
        CatalogEntry(
            id="cos",
            provenance="cos x / cos 1 is submultiplicative but not a Weierstrass function",
            cases=(
                CatalogCase("unit", "cos(x)/cos(1)", UNIT,
                            (Expectation(SM, CERTIFIED), Expectation(L, REFUTED), Expectation(W, REFUTED)),
                            refutation_margin=0.4),
            )),
        CatalogEntry(
            id="log2",
            provenance="log2(1 + x) is a Weierstrass function on both intervals, strictly for x != y",
            cases=(
                CatalogCase("unit", "log2(1+x)", UNIT, (Expectation(W, CERTIFIED, strict=True),)),
                CatalogCase("ray", "log2(1+x)", RAY, (Expectation(W, CERTIFIED, strict=True),)),
            )),
        CatalogEntry(
            id="gamma-a",
            provenance="Gamma(a x)/Gamma(a) is left Weierstrass on (0,1] for a <= x1 and Weierstrass for a <= xi",
            cases=(
                _gamma_case("a=0.1", 0.1, fully_weierstrass),
                _gamma_case("a=xi", constants.xi, fully_weierstrass),
                _gamma_case("a=0.3", 0.3, left_only),
                _gamma_case("a=x1", constants.x1, left_only),
            )),
        CatalogEntry(
            id="gamma-a-beyond",
            provenance=f"Gamma(a x)/Gamma(a) with a = {GAMMA_BEYOND_A} > x1, outside the left Weierstrass range",
            cases=(
                CatalogCase(f"a={GAMMA_BEYOND_A}", to_text(gamma_a_expression(GAMMA_BEYOND_A)), UNIT,
                            (Expectation(L, None),), logconvex=INCONCLUSIVE),
            ),
            note="x f(x) is increasing near 1, so the log-convex pair criterion cannot apply; "
                 "the left Weierstrass verdict is recorded only"),
    )


def catalog_ids() -> Tuple[str, ...]:
    return tuple(e.id for e in catalog())
