# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
The inequalities by command-line name, taking their arguments as a flat list
of numbers.
"""
from typing import List, Optional, Sequence

from weierstrass.datatypes import DomainSpec, IneqReport, FuzzSummary
from weierstrass.errors import UnknownInequalityName
from weierstrass.expr.nodes import Expression
from weierstrass.inequalities import checks, fuzz, inverse

NAMES = ("classical", "product", "logprod", "sandwich", "sin", "gamma", "gamma-uv", "chain")
NEEDS_EXPRESSION = ("sandwich", "chain")


def _count(name: str, values: Sequence[float], n: int):
    if len(values) != n:
        raise ValueError(f"{name} takes {n} values, got {len(values)}")


def _expression(name: str, f: Optional[Expression]) -> Expression:
    if f is None:
        raise ValueError(f"{name} needs an expression")
    return f


def _known(name: str):
    if name not in NAMES:
        raise UnknownInequalityName(name, NAMES)


def check_named(name: str, values: Sequence[float], f: Expression = None,
                domain: DomainSpec = None) -> List[IneqReport]:
    """
    Evaluate one inequality. logprod on three values also reports the expanded
    form; sandwich on more than two values is the n-ary chain.
    """
    _known(name)
    values = [float(v) for v in values]
    domain = domain if domain is not None else DomainSpec.unit()

    if name == "classical":
        return [checks.check_classical(values)]
    if name == "product":
        return [checks.check_product_form(values)]
    if name == "logprod":
        reports = [checks.check_log_product(values)]
        if len(values) == 3:
            reports.append(checks.check_log_product_expanded(values))
        return reports
    if name == "sandwich":
        f = _expression(name, f)
        if len(values) == 2:
            return [inverse.check_sandwich(f, domain, *values)]
        return [inverse.check_sandwich_chain(f, domain, values)]
    if name == "sin":
        _count(name, values, 2)
        return [checks.check_sin_display(*values)]
    if name == "gamma":
        _count(name, values, 3)
        return [checks.check_gamma_ineq(*values)]
    if name == "gamma-uv":
        _count(name, values, 3)
        return [checks.check_gamma_uv(*values)]
    return [checks.check_weierstrass_chain(_expression(name, f), domain, values)]


def fuzz_named(name: str, samples: int, seed: int, values: Sequence[float] = (), f: Expression = None,
               domain: DomainSpec = None) -> List[FuzzSummary]:
    """
    Fuzz one inequality. The gamma harnesses take the parameter a as their one
    value; the others take none.
    """
    _known(name)
    domain = domain if domain is not None else DomainSpec.unit()

    if name in ("gamma", "gamma-uv"):
        _count(f"fuzzing {name}", values, 1)
        harness = fuzz.fuzz_gamma if name == "gamma" else fuzz.fuzz_gamma_uv
        return [harness(float(values[0]), samples, seed)]
    _count(f"fuzzing {name}", values, 0)
    if name == "classical":
        return [fuzz.fuzz_classical(samples, seed)]
    if name == "product":
        return [fuzz.fuzz_product_form(domain, samples, seed)]
    if name == "logprod":
        return [fuzz.fuzz_log_product(domain, samples, seed), fuzz.fuzz_log_product_expanded(domain, samples, seed)]
    if name == "sandwich":
        return [fuzz.fuzz_sandwich(_expression(name, f), domain, samples, seed)]
    if name == "chain":
        return [fuzz.fuzz_weierstrass_chain(_expression(name, f), domain, samples, seed)]
    raise ValueError(f"{name} has no fuzz harness")
