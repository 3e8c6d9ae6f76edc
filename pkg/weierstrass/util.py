# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import os
import time


def get_cpu_count() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def scaled_tolerance(tol: float, *values: float) -> float:
    """`tol` scaled by max(1, |v|) over `values`"""
    return tol * max([1.0] + [abs(v) for v in values])


class Deadline:
    """Wall-clock budget started at construction"""

    def __init__(self, seconds: float):
        self.seconds = seconds
        self.start = time.monotonic()

    def expired(self) -> bool:
        return self.elapsed() > self.seconds

    def elapsed(self) -> float:
        return time.monotonic() - self.start
