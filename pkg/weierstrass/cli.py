# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Command line: python -m weierstrass <command>.

Exit codes: 0 success (whatever the verdicts), 1 catalog mismatch, 2 usage,
parse or domain error, 3 numeric failure.
"""
import argparse
import logging
import sys
from typing import List, Optional, Sequence, Tuple

from weierstrass import constants as c
from weierstrass import report
from weierstrass.catalog import run_catalog, catalog_ids
from weierstrass.config import CliConfig
from weierstrass.criteria.classify import classify_facts
from weierstrass.criteria.closure import closure_compose, closure_power, composed_expression, power_expression
from weierstrass.datatypes import DomainSpec
from weierstrass.errors import ConvergenceError, WeierstrassError
from weierstrass.expr.parser import parse
from weierstrass.expr.printer import to_text
from weierstrass.inequalities.registry import NAMES, check_named, fuzz_named
from weierstrass.special.constants import get_constants

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _common_args() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", help="(0,1] or [1,inf)", choices=["unit", "ray"], default="unit")
    common.add_argument("--delta", help="Left cut of (0,1]", type=float, default=c.DEFAULT_DELTA)
    common.add_argument("--cap", help="Right cap of [1,inf)", type=float, default=c.DEFAULT_CAP)
    common.add_argument("--max-depth", help="Maximum subdivision depth", type=int, default=c.DEFAULT_MAX_DEPTH)
    common.add_argument("--grid", help="Counterexample search grid points per axis", type=int,
                        default=c.DEFAULT_GRID_N)
    common.add_argument("--seed", help="Seed for fuzzing", type=int, default=c.DEFAULT_SEED)
    common.add_argument("--format", help="Output format", choices=["text", "json"], default="text")
    common.add_argument("--time-budget", help="Seconds allowed per property", type=float,
                        default=c.DEFAULT_TIME_BUDGET_S)
    common.add_argument("--refutation-tol", help="Margin a witness must exceed", type=float,
                        default=c.REFUTATION_TOLERANCE)
    common.add_argument("--certify-tol", help="Lower bound a non-strict leaf may reach", type=float,
                        default=c.CERTIFY_TOLERANCE)
    common.add_argument("--workers", help="Processes used by the catalog", type=int, default=1)
    common.add_argument("--verbose", help="Get all logging", action="store_true")
    common.add_argument("--quiet", help="Get only error logging", action="store_true")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_args()
    parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter,
                                     description="Certify and refute Weierstrass-type functional inequalities",
                                     prog="weierstrass")
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", parents=[common], help="Classify an expression in x",
                                   formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    classify.add_argument("expression", help="e.g. 'log2(1+x)'")

    commands.add_parser("constants", parents=[common], help="x_min, x1, xi and euler_gamma",
                        formatter_class=argparse.ArgumentDefaultsHelpFormatter)

    catalog = commands.add_parser("catalog", parents=[common], help="Run the catalog of named examples",
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    catalog.add_argument("ids", nargs="*", help=f"Entries to run, some of {list(catalog_ids())}; all by default")

    ineq = commands.add_parser("ineq", parents=[common], help="Evaluate or fuzz an inequality",
                               formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    ineq.add_argument("name", help=f"One of {list(NAMES)}")
    ineq.add_argument("values", nargs="*", type=float, help="Arguments of the inequality")
    ineq.add_argument("--expr", help="Expression for sandwich and chain", default=None)
    ineq.add_argument("--fuzz", help="Number of random samples; evaluates the given values if unset", type=int,
                      default=None)

    compose = commands.add_parser("compose", parents=[common], help="Closure rule for g(f(x))",
                                  formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    compose.add_argument("f", help="Inner function")
    compose.add_argument("g", help="Outer function")

    power = commands.add_parser("power", parents=[common], help="Closure rule for f(x)^alpha",
                                formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    power.add_argument("f", help="Base function")
    power.add_argument("alpha", type=float, help="Exponent")
    return parser


def _config(args: argparse.Namespace) -> CliConfig:
    return CliConfig(domain=args.domain, delta=args.delta, cap=args.cap, max_depth=args.max_depth,
                     grid=args.grid, seed=args.seed, format=args.format, time_budget=args.time_budget,
                     refutation_tol=args.refutation_tol, certify_tol=args.certify_tol, workers=args.workers)


def _domain(cfg: CliConfig) -> DomainSpec:
    return DomainSpec.unit(cfg.delta) if cfg.domain == "unit" else DomainSpec.ray(cfg.cap)


def cmd_classify(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    f = parse(args.expression)
    facts = classify_facts(f, _domain(cfg), cfg.certify_config())
    return list(facts.verdicts), {"expression": to_text(f)}, EXIT_OK


def cmd_constants(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    return [get_constants()], {}, EXIT_OK


def cmd_catalog(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    results = run_catalog(args.ids, cfg.certify_config(), cfg.workers)
    code = EXIT_OK if all(r.match for r in results) else EXIT_MISMATCH
    return results, {"ids": list(args.ids)}, code


def cmd_ineq(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    f = parse(args.expr) if args.expr is not None else None
    extra = {"name": args.name, "values": list(args.values), "expression": to_text(f) if f is not None else None,
             "fuzz": args.fuzz}
    if args.fuzz is not None:
        results = fuzz_named(args.name, args.fuzz, cfg.seed, args.values, f, _domain(cfg))
    else:
        results = check_named(args.name, args.values, f, _domain(cfg))
    return results, extra, EXIT_OK


def cmd_compose(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    domain, certify = _domain(cfg), cfg.certify_config()
    f = classify_facts(parse(args.f), domain, certify)
    g = classify_facts(parse(args.g), domain, certify)
    verdict = closure_compose(f, g, certify)
    return [verdict], {"f": f.text, "g": g.text, "composed": to_text(composed_expression(f, g))}, EXIT_OK


def cmd_power(args: argparse.Namespace, cfg: CliConfig) -> Tuple[list, dict, int]:
    f = classify_facts(parse(args.f), _domain(cfg), cfg.certify_config())
    verdict = closure_power(f, args.alpha)
    return [verdict], {"f": f.text, "alpha": args.alpha,
                       "power": to_text(power_expression(f, args.alpha))}, EXIT_OK


COMMANDS = {
    "classify": cmd_classify,
    "constants": cmd_constants,
    "catalog": cmd_catalog,
    "ineq": cmd_ineq,
    "compose": cmd_compose,
    "power": cmd_power,
}


def _output(command: str, cfg: CliConfig, extra: dict, results: Sequence) -> str:
    if cfg.format == "json":
        config = cfg.to_dict()
        config.update(extra)
        return report.to_json(report.envelope(command, config, results))
    header = [f"{k}: {v}" for k, v in extra.items() if v is not None and v != []]
    return "\n".join(header + [report.to_text(results)])


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    log_level: int = logging.INFO
    if args.verbose:
        log_level = logging.DEBUG
    elif args.quiet:
        log_level = logging.ERROR
    logging.basicConfig(format='%(asctime)s: %(levelname)s: %(message)s',
                        level=log_level, datefmt="%d/%m/%Y %H:%M:%S")

    try:
        cfg = _config(args)
        results, extra, code = COMMANDS[args.command](args, cfg)
        print(_output(args.command, cfg, extra, results))
        return code
    except ConvergenceError as e:
        logging.error(e)
        return EXIT_NUMERIC
    except (WeierstrassError, ValueError) as e:
        logging.error(e)
        return EXIT_USAGE
    except Exception as e:
        logging.exception(e)
        return EXIT_NUMERIC


if __name__ == '__main__':
    sys.exit(main())
