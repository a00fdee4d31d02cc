"""Exécution des vérifications et agrégation des rapports"""
import logging
import math
import re
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from fracver.claims.registry import Measurement, registry
from fracver.core.config import settings
from fracver.core.errors import FracverError, UnknownClaimError
from fracver.schemas.claim import ClaimReport, ClaimSummary, Direction

logger = logging.getLogger(__name__)

# Référence attendue dans paper_ref : section, annexe, proposition...
REFERENCE_PATTERN = re.compile(r"§\d|Appendix [A-Z]|Theorem|Proposition|Remark|Example")


def _passes(direction: Direction, value: float, tolerance: float) -> bool:
    if math.isnan(value):
        return False
    if direction == Direction.LOWER:
        return value >= tolerance
    return value <= tolerance


def run_claim(id: str) -> ClaimReport:
    """Exécute une vérification enregistrée"""
    claim = registry.get(id)
    if claim is None:
        raise UnknownClaimError(f"vérification inconnue : {id!r}", known=len(registry.claims))
    info = claim.info
    logger.debug("vérification %s", id)
    start = time.perf_counter()
    try:
        measurement = claim.check()
    except FracverError as exc:
        logger.error("%s : %s", id, exc)
        measurement = Measurement(math.nan, guard=False, note=f"{type(exc).__name__}: {exc}")
    runtime_ms = int(round((time.perf_counter() - start) * 1000))
    passed = measurement.guard and _passes(info.direction, measurement.value, info.tolerance)
    if not passed:
        logger.warning("%s en échec : valeur %.4g, tolérance %.4g (%s)",
                       id, measurement.value, info.tolerance, info.direction.value)
    return ClaimReport(
        id=info.id,
        paper_ref=info.paper_ref,
        metric=info.metric,
        value=float(measurement.value),
        tolerance=info.tolerance,
        direction=info.direction,
        passed=passed,
        runtime_ms=runtime_ms,
        note=measurement.note,
    )


def run_all(tag: Optional[str] = None, workers: Optional[int] = None) -> List[ClaimReport]:
    """Toutes les vérifications (filtrées par tag), triées par id"""
    ids = registry.ids(tag)
    workers = workers or settings.CLAIM_WORKERS
    if workers == 1:
        reports = [run_claim(i) for i in ids]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run_claim, ids))
    return sorted(reports, key=lambda r: r.id)


def summarize(reports: Sequence[ClaimReport]) -> ClaimSummary:
    passed = sum(1 for r in reports if r.passed)
    return ClaimSummary(
        total=len(reports),
        passed=passed,
        failed=len(reports) - passed,
        runtime_ms=sum(r.runtime_ms for r in reports),
    )


def lint_registry() -> List[str]:
    """Problèmes de métadonnées du registre (liste vide si tout est conforme)"""
    problems = []
    for id in registry.ids():
        info = registry.get(id).info
        if not info.anchor.strip():
            problems.append(f"{id} : ancre vide")
        if not REFERENCE_PATTERN.search(info.paper_ref):
            problems.append(f"{id} : paper_ref sans référence de section ({info.paper_ref!r})")
        if not info.tags:
            problems.append(f"{id} : aucun tag")
        if not (math.isfinite(info.tolerance) and info.tolerance > 0):
            problems.append(f"{id} : tolérance invalide {info.tolerance}")
    return problems
