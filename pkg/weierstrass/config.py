# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from dataclasses import dataclass, asdict
from typing import List

from weierstrass import constants as c


@dataclass(frozen=True)
class CertifyConfig:
    """Limits and tolerances for classification and counterexample search"""
    max_depth: int = c.DEFAULT_MAX_DEPTH
    time_budget_s: float = c.DEFAULT_TIME_BUDGET_S
    grid_n: int = c.DEFAULT_GRID_N
    refine_rounds: int = c.DEFAULT_REFINE_ROUNDS
    refutation_tol: float = c.REFUTATION_TOLERANCE
    certify_tol: float = c.CERTIFY_TOLERANCE
    seed: int = c.DEFAULT_SEED

    def __post_init__(self):
        validate_int(self.max_depth, "max_depth", 1, 200)
        validate_float(self.time_budget_s, "time_budget_s", 0.0)
        validate_int(self.grid_n, "grid_n", 3, 10_000)
        validate_int(self.refine_rounds, "refine_rounds", 0, 100)
        validate_float(self.refutation_tol, "refutation_tol", 0.0)
        validate_float(self.certify_tol, "certify_tol", 0.0)
        validate_int(self.seed, "seed", 0)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class CliConfig:
    """Everything the command line can set. Mirrors DomainSpec and CertifyConfig defaults."""
    domain: str = "unit"
    delta: float = c.DEFAULT_DELTA
    cap: float = c.DEFAULT_CAP
    max_depth: int = c.DEFAULT_MAX_DEPTH
    grid: int = c.DEFAULT_GRID_N
    seed: int = c.DEFAULT_SEED
    format: str = "text"
    time_budget: float = c.DEFAULT_TIME_BUDGET_S
    refutation_tol: float = c.REFUTATION_TOLERANCE
    certify_tol: float = c.CERTIFY_TOLERANCE
    workers: int = 1

    def __post_init__(self):
        validate_str(self.domain, "domain", allowed=["unit", "ray"])
        validate_str(self.format, "format", allowed=["text", "json"])
        validate_float(self.delta, "delta", 0.0, 1.0)
        validate_float(self.cap, "cap", 1.0)
        validate_int(self.workers, "workers", 1)

    def certify_config(self) -> CertifyConfig:
        return CertifyConfig(
            max_depth=self.max_depth,
            time_budget_s=self.time_budget,
            grid_n=self.grid,
            refutation_tol=self.refutation_tol,
            certify_tol=self.certify_tol,
            seed=self.seed)

    def to_dict(self) -> dict:
        return asdict(self)


def validate_str(val: str, name: str, allowed: List[str] = None) -> str:
    if val is None:
        raise ValueError(f"parameter {name} was None")
    val = str(val)
    if allowed is not None and val not in allowed:
        raise ValueError(f"parameter {name} not in {allowed}, was {val}")
    return val


def validate_int(val: int, name: str, minval: int = None, maxval: int = None) -> int:
    if val is None:
        raise ValueError(f"parameter {name} was None")
    if isinstance(val, float) and not val.is_integer():
        raise ValueError(f"parameter {name} must be an integer, was {val}")
    val = int(val)
    if minval is not None and val < minval:
        raise ValueError(f"parameter {name} must be greater or equal to {minval}, was {val}")
    if maxval is not None and val > maxval:
        raise ValueError(f"parameter {name} must be less than or equal to {maxval}, was {val}")
    return val


def validate_float(val: float, name: str, minval: float = None, maxval: float = None) -> float:
    if val is None:
        raise ValueError(f"parameter {name} was None")
    val = float(val)
    if val != val:
        raise ValueError(f"parameter {name} was NaN")
    if minval is not None and val < minval:
        raise ValueError(f"parameter {name} must be greater or equal to {minval}, was {val}")
    if maxval is not None and val > maxval:
        raise ValueError(f"parameter {name} must be less than or equal to {maxval}, was {val}")
    return val
