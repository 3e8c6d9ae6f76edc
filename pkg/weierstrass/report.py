# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
"""
Report output: the JSON envelope {command, config, results, version} and the
line-oriented text form. Neither carries a timestamp, so the same flags and
seed give byte-identical output.
"""
import json
import math
from typing import Any, List, Sequence

from weierstrass.constants import REPORT_SCHEMA_VERSION
from weierstrass.datatypes import PropertyVerdict, IneqReport, FuzzSummary, CaseResult, Outcome, \
    NormalizationCheck
from weierstrass.special.constants import GammaConstants


def envelope(command: str, config: dict, results: Sequence[Any]) -> dict:
    return {
        "command": command,
        "config": config,
        "results": [r.to_dict() if hasattr(r, "to_dict") else r for r in results],
        "version": REPORT_SCHEMA_VERSION,
    }


def _json_safe(value):
    """inf and nan are not JSON; they are written as strings"""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def to_json(env: dict) -> str:
    return json.dumps(_json_safe(env), sort_keys=True, indent=2, default=str)


def verdict_lines(pv: PropertyVerdict) -> List[str]:
    v = pv.verdict
    head = f"{pv.property.value}: {v.outcome.value}"
    if v.outcome == Outcome.CERTIFIED:
        flavour = "strict" if v.strict else "non-strict"
        return [f"{head} ({v.criterion})",
                f"    {flavour}, depth {v.depth}, {v.leaves} leaves, min lower bound {v.min_lower:.3e}"]
    if v.outcome == Outcome.REFUTED:
        w = v.witness
        return [f"{head} ({v.criterion})",
                f"    witness x={w.x!r} y={w.y!r}: lhs {w.lhs!r} > rhs {w.rhs!r}, margin {w.margin:.3e}"]
    lines = [f"{head} ({v.reason})"]
    if v.subbox is not None:
        lines.append(f"    on {v.subbox}")
    return lines


def normalization_lines(check: NormalizationCheck) -> List[str]:
    return [f"normalization: f(1) = {check.f1!r}, positive on box: {check.positive_on_box}, "
            f"admitted: {check.admitted}"]


def ineq_lines(r: IneqReport) -> List[str]:
    state = "holds" if r.holds else "FAILS"
    lines = [f"{r.name} {list(r.inputs)}: {state}, lhs {r.lhs!r}, rhs {r.rhs!r}, slack {r.slack!r}"]
    lines.extend(f"    {n}" for n in r.notes)
    return lines


def fuzz_lines(s: FuzzSummary) -> List[str]:
    state = "holds" if s.holds else "FAILS"
    lines = [f"{s.name}: {state}, {s.samples} samples (seed {s.seed}), {s.violations} violations, "
             f"min slack {s.min_slack!r} at {list(s.worst_inputs)}"]
    lines.extend(f"    {n}" for n in s.notes)
    return lines


def constants_lines(c: GammaConstants) -> List[str]:
    return [
        f"euler_gamma = {c.euler_gamma!r} (|gamma + digamma(1)| = {c.euler_gamma_crosscheck:.1e})",
        f"x_min = {c.x_min!r} (+/- {c.x_min_tolerance:.1e})",
        f"x1 = {c.x1!r}",
        f"xi = {c.xi!r} (+/- {c.xi_error:.1e}, {c.series_terms} series terms)",
    ]


def case_lines(r: CaseResult) -> List[str]:
    lines = [f"[{'match' if r.match else 'MISMATCH'}] {r.entry_id} / {r.label}: {r.expression} "
             f"on {r.domain.label()} ({r.provenance})"]
    if r.normalization is not None and not r.normalization.admitted:
        lines.extend("    " + line for line in normalization_lines(r.normalization))
    for pv in r.verdicts:
        lines.extend("    " + line for line in verdict_lines(pv))
    if r.logconvex is not None:
        detail = r.logconvex.reason if r.logconvex.outcome == Outcome.INCONCLUSIVE else r.logconvex.criterion
        lines.append(f"    log-convex pair: {r.logconvex.outcome.value} ({detail})")
    lines.extend(f"    mismatch: {m}" for m in r.mismatches)
    return lines


def text_lines(result) -> List[str]:
    if isinstance(result, PropertyVerdict):
        return verdict_lines(result)
    if isinstance(result, IneqReport):
        return ineq_lines(result)
    if isinstance(result, FuzzSummary):
        return fuzz_lines(result)
    if isinstance(result, GammaConstants):
        return constants_lines(result)
    if isinstance(result, CaseResult):
        return case_lines(result)
    if isinstance(result, NormalizationCheck):
        return normalization_lines(result)
    raise ValueError(f"No text form for {type(result).__name__}")


def to_text(results: Sequence[Any]) -> str:
    return "\n".join(line for r in results for line in text_lines(r))
