# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Runs the acceptance suites (constants, catalog, inequality fuzzing) and prints
a line per suite with its outcome and how long it took. Exits 1 if any suite fails.

    PYTHONPATH=. python3 bin/run_acceptance.py --workers 4
"""
import argparse
import logging
import sys
import time
from typing import Callable, List, Tuple

from weierstrass.catalog import run_catalog
from weierstrass.config import CertifyConfig
from weierstrass.constants import GAMMA_SWEEP, FUZZ_SAMPLES, FUZZ_PAIR_SAMPLES, DEFAULT_SEED
from weierstrass.datatypes import DomainSpec
from weierstrass.expr.parser import parse
from weierstrass.inequalities import fuzz_classical, fuzz_product_form, fuzz_log_product, \
    fuzz_log_product_expanded, fuzz_sandwich, fuzz_weierstrass_chain, fuzz_gamma, fuzz_gamma_uv
from weierstrass.special.constants import get_constants

Suite = Tuple[str, Callable[[], List[str]]]


def constants_suite() -> List[str]:
    c = get_constants()
    problems = []
    if not 1.46158 <= c.x_min <= 1.46168:
        problems.append(f"x_min {c.x_min!r}")
    if not 0.21604 <= c.xi <= 0.21614:
        problems.append(f"xi {c.xi!r}")
    if c.euler_gamma_crosscheck > 1e-10:
        problems.append(f"euler_gamma crosscheck {c.euler_gamma_crosscheck!r}")
    return problems


def catalog_suite(workers: int) -> Callable[[], List[str]]:
    def run() -> List[str]:
        return [f"{r.entry_id} / {r.label}: {m}" for r in run_catalog(None, CertifyConfig(), workers)
                for m in r.mismatches]
    return run


def fuzz_suite(seed: int) -> List[str]:
    unit, ray = DomainSpec.unit(), DomainSpec.ray()
    arctan = parse("(4/pi)*arctan(x)")
    summaries = [
        fuzz_classical(FUZZ_SAMPLES, seed),
        fuzz_product_form(unit, FUZZ_SAMPLES, seed),
        fuzz_product_form(ray, FUZZ_SAMPLES, seed),
        fuzz_log_product(unit, FUZZ_SAMPLES, seed),
        fuzz_log_product(ray, FUZZ_SAMPLES, seed),
        fuzz_log_product_expanded(unit, FUZZ_PAIR_SAMPLES, seed),
        fuzz_log_product_expanded(ray, FUZZ_PAIR_SAMPLES, seed),
        fuzz_sandwich(arctan, unit, FUZZ_PAIR_SAMPLES, seed),
        fuzz_weierstrass_chain(parse("log2(1+x)"), unit, FUZZ_PAIR_SAMPLES, seed),
    ]
    for a in GAMMA_SWEEP:
        summaries.append(fuzz_gamma(a, FUZZ_PAIR_SAMPLES, seed))
        summaries.append(fuzz_gamma_uv(a, FUZZ_PAIR_SAMPLES, seed))
    return [f"{s.name}: {s.violations} violations, min slack {s.min_slack!r} at {list(s.worst_inputs)}"
            for s in summaries if not s.holds]


def run(suites: List[Suite]) -> bool:
    ok = True
    for name, suite in suites:
        t0 = time.time()
        problems = suite()
        print(f"{name:<10} {'PASS' if not problems else 'FAIL'} {time.time() - t0:8.2f}s")
        for p in problems:
            print(f"    {p}")
        ok = ok and not problems
    return ok


if __name__ == '__main__':
    parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                     description="Run the acceptance suites")
    parser.add_argument("--workers", help="Processes used by the catalog", type=int, default=1)
    parser.add_argument("--seed", help="Seed for fuzzing", type=int, default=DEFAULT_SEED)
    parser.add_argument("--verbose", help="Get all logging", action="store_true")
    args = parser.parse_args()

    logging.basicConfig(format='%(asctime)s: %(levelname)s: %(message)s',
                        level=logging.DEBUG if args.verbose else logging.WARNING,
                        datefmt="%d/%m/%Y %H:%M:%S")

    passed = run([
        ("constants", constants_suite),
        ("catalog", catalog_suite(args.workers)),
        ("fuzz", lambda: fuzz_suite(args.seed)),
    ])
    sys.exit(0 if passed else 1)
