# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple, Optional, Union

from weierstrass.constants import DEFAULT_DELTA, DEFAULT_CAP, REPORT_TOLERANCE, NORMALIZATION_TOLERANCE
from weierstrass.config import validate_float
from weierstrass.expr.nodes import Expression
from weierstrass.expr.printer import to_text
from weierstrass.interval.interval import Interval


class Property(Enum):
    L_WEIERSTRASS = "lWeierstrass"
    R_WEIERSTRASS = "rWeierstrass"
    SUBMULTIPLICATIVE = "Submultiplicative"
    WEIERSTRASS = "Weierstrass"


class Outcome(Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


class DomainKind(Enum):
    UNIT = "unit"
    RAY = "ray"


@dataclass(frozen=True)
class DomainSpec:
    """
    The interval J: (0, 1] (UNIT) or [1, inf) (RAY), and the closed box that
    stands in for it in every certificate and search: [left_cut, 1] or [1, right_cap].
    """
    kind: DomainKind
    left_cut: float = DEFAULT_DELTA
    right_cap: float = DEFAULT_CAP

    def __post_init__(self):
        if not isinstance(self.kind, DomainKind):
            object.__setattr__(self, 'kind', DomainKind(self.kind))
        validate_float(self.left_cut, "left_cut")
        validate_float(self.right_cap, "right_cap")
        if self.kind == DomainKind.UNIT and not 0.0 < self.left_cut < 1.0:
            raise ValueError(f"left_cut must be in (0, 1), was {self.left_cut}")
        if self.kind == DomainKind.RAY and not self.right_cap > 1.0:
            raise ValueError(f"right_cap must be greater than 1, was {self.right_cap}")

    @classmethod
    def unit(cls, delta: float = DEFAULT_DELTA) -> 'DomainSpec':
        return cls(DomainKind.UNIT, left_cut=delta)

    @classmethod
    def ray(cls, cap: float = DEFAULT_CAP) -> 'DomainSpec':
        return cls(DomainKind.RAY, right_cap=cap)

    def box(self) -> Interval:
        if self.kind == DomainKind.UNIT:
            return Interval(self.left_cut, 1.0)
        return Interval(1.0, self.right_cap)

    def product_box(self) -> Interval:
        """
        The range of xy for x, y in the box, [left_cut^2, 1] or [1, right_cap^2]
        rounded outward. One-variable criteria for the product inequalities are
        certified here, since f(xy) is evaluated over it.
        """
        square = self.box() * self.box()
        if self.kind == DomainKind.UNIT:
            return Interval(square.lo, 1.0)
        return Interval(1.0, square.hi)

    def in_domain(self, x: float) -> bool:
        """Membership of the untruncated J"""
        if self.kind == DomainKind.UNIT:
            return 0.0 < x <= 1.0
        return x >= 1.0

    def label(self) -> str:
        b = self.box()
        if self.kind == DomainKind.UNIT:
            return f"(0,1] truncated to [{b.lo:g}, {b.hi:g}]"
        return f"[1,inf) truncated to [{b.lo:g}, {b.hi:g}]"

    def to_dict(self) -> dict:
        b = self.box()
        return {"kind": self.kind.value, "box": [b.lo, b.hi]}


Box = Tuple[float, float]
PairBox = Tuple[Box, Box]


@dataclass(frozen=True)
class Certified:
    """
    A subdivision certificate: every leaf of a subdivision of `box` (or of
    box x box for two-variable inequalities) had an enclosure lower bound of at
    least 0, or at least -certify_tol at maximum depth. `strict` if all were > 0.
    """
    criterion: str
    box: Box
    depth: int
    strict: bool
    min_lower: float
    leaves: int
    pair: bool = False

    outcome = Outcome.CERTIFIED

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "criterion": self.criterion,
            "box": [list(self.box), list(self.box)] if self.pair else list(self.box),
            "max_depth_used": self.depth,
            "strict": self.strict,
            "min_lower": self.min_lower,
            "leaves": self.leaves,
        }


@dataclass(frozen=True)
class Witness:
    """A pair (x, y) with lhs > rhs for an inequality lhs <= rhs; margin = lhs - rhs"""
    x: float
    y: float
    lhs: float
    rhs: float
    margin: float

    def to_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "lhs": self.lhs, "rhs": self.rhs, "margin": self.margin}


@dataclass(frozen=True)
class Refuted:
    witness: Witness
    criterion: str = "counterexample search"

    outcome = Outcome.REFUTED

    def to_dict(self) -> dict:
        return {"outcome": self.outcome.value, "criterion": self.criterion, "witness": self.witness.to_dict()}


@dataclass(frozen=True)
class Inconclusive:
    reason: str
    subbox: Optional[Union[Box, PairBox]] = None

    outcome = Outcome.INCONCLUSIVE

    def to_dict(self) -> dict:
        subbox = self.subbox
        if subbox is not None:
            subbox = [list(b) for b in subbox] if isinstance(subbox[0], tuple) else list(subbox)
        return {"outcome": self.outcome.value, "reason": self.reason, "subbox": subbox}


Verdict = Union[Certified, Refuted, Inconclusive]


@dataclass(frozen=True)
class PropertyVerdict:
    property: Property
    verdict: Verdict
    domain: DomainSpec

    @property
    def outcome(self) -> Outcome:
        return self.verdict.outcome

    def is_certified(self) -> bool:
        return self.outcome == Outcome.CERTIFIED

    def to_dict(self) -> dict:
        d = {"property": self.property.value, "domain": self.domain.to_dict()}
        d.update(self.verdict.to_dict())
        return d


@dataclass(frozen=True)
class NormalizationCheck:
    f1: float
    positive_on_box: bool
    min_lower: Optional[float] = None

    @property
    def admitted(self) -> bool:
        return abs(self.f1 - 1.0) <= NORMALIZATION_TOLERANCE and self.positive_on_box

    def to_dict(self) -> dict:
        return {"f1": self.f1, "positive_on_box": self.positive_on_box,
                "min_lower": self.min_lower, "admitted": self.admitted}


@dataclass(frozen=True)
class IneqReport:
    """
    One evaluation of an inequality between lhs and rhs as written, with slack
    oriented so that it holds when slack >= -tolerance.
    For chains low <= mid <= high, lhs is low, rhs is high, slack is the smaller
    of the two slacks and the middle value goes in the notes.
    """
    name: str
    inputs: Tuple[float, ...]
    lhs: float
    rhs: float
    slack: float
    notes: Tuple[str, ...] = ()
    tolerance: float = REPORT_TOLERANCE

    @property
    def holds(self) -> bool:
        return self.slack >= -self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "inputs": list(self.inputs),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "tolerance": self.tolerance,
            "holds": self.holds,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FuzzSummary:
    name: str
    samples: int
    violations: int
    min_slack: float
    worst_inputs: Tuple[float, ...]
    seed: int
    notes: Tuple[str, ...] = ()

    @property
    def holds(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "violations": self.violations,
            "min_slack": self.min_slack,
            "worst_inputs": list(self.worst_inputs),
            "seed": self.seed,
            "holds": self.holds,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class FunctionFacts:
    """What classification established about f on J; the input of the closure rules"""
    expression: Expression
    domain: DomainSpec
    verdicts: Tuple[PropertyVerdict, ...]
    h_criterion: Verdict

    @property
    def text(self) -> str:
        return to_text(self.expression)

    def verdict(self, prop: Property) -> PropertyVerdict:
        for v in self.verdicts:
            if v.property == prop:
                return v
        raise KeyError(prop)

    def certified(self, prop: Property) -> bool:
        return self.verdict(prop).is_certified()

    def h_certified(self) -> bool:
        return self.h_criterion.outcome == Outcome.CERTIFIED


@dataclass(frozen=True)
class Expectation:
    """An expected outcome for a property; outcome None records the actual outcome only"""
    property: Property
    outcome: Optional[Outcome]
    strict: bool = False


@dataclass(frozen=True)
class CatalogCase:
    """
    One classified function. logconvex is the expected outcome of the log-convex
    pair criterion on its own; every expected refutation must have a witness
    margin above refutation_margin.
    """
    label: str
    expression: str
    domain: DomainSpec
    expected: Tuple[Expectation, ...] = ()
    normalization_fails: bool = False
    logconvex: Optional[Outcome] = None
    refutation_margin: Optional[float] = None


@dataclass(frozen=True)
class CatalogEntry:
    """
    A named example: one or more (expression, domain) cases, for entries that
    cover both domains or sweep a parameter, each with its expectations.
    """
    id: str
    provenance: str
    cases: Tuple[CatalogCase, ...] = field(default_factory=tuple)
    note: str = ""


@dataclass(frozen=True)
class CaseResult:
    """The outcome of one catalog case; it matches when nothing is listed in mismatches"""
    entry_id: str
    label: str
    expression: str
    domain: DomainSpec
    provenance: str
    verdicts: Tuple[PropertyVerdict, ...] = ()
    normalization: Optional[NormalizationCheck] = None
    logconvex: Optional[Verdict] = None
    mismatches: Tuple[str, ...] = ()

    @property
    def match(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "id": self.entry_id,
            "label": self.label,
            "expression": self.expression,
            "domain": self.domain.to_dict(),
            "provenance": self.provenance,
            "verdicts": [v.to_dict() for v in self.verdicts],
            "normalization": self.normalization.to_dict() if self.normalization is not None else None,
            "logconvex": self.logconvex.to_dict() if self.logconvex is not None else None,
            "match": self.match,
            "mismatches": list(self.mismatches),
        }
