# This file is part of the Weierstrass function certification model, copyright © Centre for Sustainable Energy, 2023
# Licensed under the Reciprocal Public License v1.5. See LICENSE for licensing details.
import logging
import multiprocessing as mp
import time
from typing import List, Optional, Sequence

from weierstrass.catalog.entries import catalog, catalog_ids
from weierstrass.config import CertifyConfig
from weierstrass.criteria.classify import classify_facts, check_normalization
from weierstrass.criteria.logconvex import certify_logconvex_pair
from weierstrass.criteria.oracle import grid_oracle
from weierstrass.datatypes import CatalogEntry, CatalogCase, CaseResult, Outcome, PropertyVerdict
from weierstrass.errors import NormalizationError
from weierstrass.expr.parser import parse
from weierstrass.util import get_cpu_count


def _verdict_mismatches(case: CatalogCase, verdicts: Sequence[PropertyVerdict]) -> List[str]:
    by_property = {v.property: v for v in verdicts}
    mismatches = []
    for e in case.expected:
        if e.outcome is None:
            continue
        actual = by_property[e.property]
        if actual.outcome != e.outcome:
            mismatches.append(f"{e.property.value}: expected {e.outcome.value}, got {actual.outcome.value}")
        elif e.strict and not actual.verdict.strict:
            mismatches.append(f"{e.property.value}: expected a strict certificate")
        elif e.outcome == Outcome.REFUTED and case.refutation_margin is not None \
                and not actual.verdict.witness.margin > case.refutation_margin:
            mismatches.append(f"{e.property.value}: witness margin {actual.verdict.witness.margin!r} "
                              f"not above {case.refutation_margin!r}")
    return mismatches


def _oracle_mismatches(case: CatalogCase, verdicts: Sequence[PropertyVerdict]) -> List[str]:
    """Every expected certificate is checked against the dense grid"""
    f = parse(case.expression)
    mismatches = []
    for v in verdicts:
        expected = [e for e in case.expected if e.property == v.property and e.outcome == Outcome.CERTIFIED]
        if expected and v.is_certified():
            witness = grid_oracle(f, case.domain, v.property)
            if witness is not None:
                mismatches.append(f"{v.property.value}: grid oracle violation at x={witness.x!r}, y={witness.y!r}, "
                                  f"margin {witness.margin!r}")
    return mismatches


def run_case(entry: CatalogEntry, case: CatalogCase, cfg: CertifyConfig = CertifyConfig()) -> CaseResult:
    start_time = time.time()
    f = parse(case.expression)
    normalization = check_normalization(f, case.domain, cfg)
    result = dict(entry_id=entry.id, label=case.label, expression=case.expression, domain=case.domain,
                  provenance=entry.provenance, normalization=normalization)

    if case.normalization_fails:
        mismatches = [] if not normalization.admitted else ["expected the normalization check to fail"]
        return CaseResult(mismatches=tuple(mismatches), **result)

    try:
        facts = classify_facts(f, case.domain, cfg)
    except NormalizationError as e:
        return CaseResult(mismatches=(f"not admitted: {e}",), **result)

    mismatches = _verdict_mismatches(case, facts.verdicts)
    mismatches += _oracle_mismatches(case, facts.verdicts)

    logconvex = None
    if case.logconvex is not None:
        logconvex = certify_logconvex_pair(f, case.domain, cfg)
        if logconvex.outcome != case.logconvex:
            mismatches.append(f"log-convex pair: expected {case.logconvex.value}, got {logconvex.outcome.value}")

    if mismatches:
        logging.warning(f"Catalog {entry.id} / {case.label} mismatches: {'; '.join(mismatches)}")
    logging.info(f"Catalog {entry.id} / {case.label} took {round(time.time() - start_time, 2)} s.")
    return CaseResult(verdicts=facts.verdicts, logconvex=logconvex, mismatches=tuple(mismatches), **result)


def _selected(ids: Optional[Sequence[str]]) -> List[CatalogEntry]:
    if not ids:
        return list(catalog())
    unknown = [i for i in ids if i not in catalog_ids()]
    if unknown:
        raise ValueError(f"Unknown catalog ids {unknown}, expected some of {list(catalog_ids())}")
    return [e for e in catalog() if e.id in ids]


def run_catalog(ids: Optional[Sequence[str]] = None, cfg: CertifyConfig = CertifyConfig(),
                workers: int = 1) -> List[CaseResult]:
    """
    Classify every case of the selected entries (all of them by default) and
    compare with the expectations. Results keep catalog order whatever the
    number of worker processes.
    """
    jobs = [(entry, case, cfg) for entry in _selected(ids) for case in entry.cases]
    workers = max(1, min(workers, len(jobs), get_cpu_count()))
    logging.info(f"Running {len(jobs)} catalog cases using {workers} processes")

    if workers == 1:
        results = [run_case(*job) for job in jobs]
    else:
        with mp.get_context("spawn").Pool(workers) as pool:
            results = pool.starmap(run_case, jobs, chunksize=1)

    matched = sum(1 for r in results if r.match)
    logging.info(f"Catalog: {matched} of {len(results)} cases match")
    return results
