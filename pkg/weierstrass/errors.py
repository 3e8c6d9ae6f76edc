# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from typing import Iterable, Optional


class WeierstrassError(ValueError):
    """Base of every error raised by the model"""


class DomainError(WeierstrassError):
    """
    An argument lies outside the natural domain of a function, or an interval
    touches a singularity.

    :param message: what went wrong
    :param node: printed sub-expression being evaluated, if known
    :param value: the offending argument (a float or an Interval)
    """

    def __init__(self, message: str, node: Optional[str] = None, value=None):
        self.message = message
        self.node = node
        self.value = value
        super().__init__(self._text())

    def with_node(self, node: str) -> 'DomainError':
        if self.node is None:
            self.node = node
            self.args = (self._text(),)
        return self

    def _text(self) -> str:
        text = self.message
        if self.node is not None:
            text += f" in {self.node}"
        if self.value is not None:
            text += f" at argument {self.value}"
        return text


class MixedDomainError(DomainError):
    """Values straddle 1, so they do not all lie in the same interval J"""


class NormalizationError(DomainError):
    """A candidate function fails f(1) = 1 or positivity on the truncated box"""

    def __init__(self, message: str, check=None):
        self.check = check
        super().__init__(message)


class ExprSyntaxError(WeierstrassError):
    def __init__(self, message: str, column: int, expected: Iterable[str], found: str):
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        self.found = found
        super().__init__(f"{message} at column {column}: found {found!r}, expected one of {list(self.expected)}")


class UnknownIdentifier(WeierstrassError):
    def __init__(self, name: str, column: int):
        self.name = name
        self.column = column
        super().__init__(f"Unknown identifier {name!r} at column {column}")


class ConvergenceError(WeierstrassError):
    """A root bracket does not straddle zero, or an iteration failed to converge"""


class NotMonotone(WeierstrassError):
    pass


class OutOfRange(WeierstrassError):
    pass


class PreconditionNotCertified(WeierstrassError):
    def __init__(self, missing: str):
        self.missing = missing
        super().__init__(f"Closure precondition not certified: {missing}")


class UnknownInequalityName(WeierstrassError):
    def __init__(self, name: str, known: Iterable[str]):
        self.name = name
        super().__init__(f"Unknown inequality {name!r}, expected one of {sorted(known)}")
