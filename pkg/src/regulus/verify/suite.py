"""Running a filtered slice of the registry"""

import fnmatch
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from regulus.config import Settings, get_settings
from regulus.exceptions import RegulusError
from regulus.models import CheckParams, CheckResult, CheckStatus, Report
from regulus.partitions import modular_table
from .base import Check
from .checks import FamilyCheck
from .registry import list_checks

logger = logging.getLogger(__name__)


def select_checks(pattern: str, include_stretch: bool = False) -> List[Check]:
    """Checks whose name matches a shell-style pattern; an empty pattern matches nothing"""
    if not pattern:
        return []
    return [
        check
        for check in list_checks(include_stretch=include_stretch)
        if fnmatch.fnmatchcase(check.name, pattern)
    ]


def _run_reported(check: Check, order: int, n_max: int, settings: Settings) -> CheckResult:
    """Run a check; an evaluation error becomes a failed result carrying its message"""
    try:
        return check.run(order, n_max, settings)
    except RegulusError as e:
        logger.warning("%s could not be evaluated: %s", check.name, e)
        return CheckResult(
            name=check.name,
            equation=check.equation,
            status=CheckStatus.FAIL,
            params=CheckParams(
                order=order,
                modulus=check.modulus,
                n_max=(
                    check.effective_n_max(n_max) if isinstance(check, FamilyCheck) else None
                ),
            ),
            note=str(e),
        )


def _table_orders(
    checks: List[Check], order: int, n_max: int, settings: Settings
) -> Dict[int, int]:
    """Largest b_l mod l table each modulus needs, within the order cap"""
    orders: Dict[int, int] = {}
    for check in checks:
        if check.modulus is None:
            continue
        if isinstance(check, FamilyCheck):
            needed = check.required_order(n_max)
        else:
            needed = order
        if needed > settings.max_order:
            # the check itself reports the cap
            continue
        orders[check.modulus] = max(orders.get(check.modulus, 0), needed)
    return orders


def run_suite(
    pattern: str,
    order: Optional[int] = None,
    n_max: Optional[int] = None,
    threads: Optional[int] = None,
    include_stretch: bool = False,
    settings: Optional[Settings] = None,
) -> Report:
    """
    Run every registered check whose name matches ``pattern``

    Tables of b_l mod l are built once per modulus at the largest order any
    selected check needs, then the checks run on a thread pool. Results keep
    registration order. A check that cannot be evaluated (order too small,
    cap exceeded) is reported as a failure with a note instead of aborting
    the suite.

    Args:
        pattern: fnmatch pattern such as "t13-*" or "*"
        order: Base truncation order (default from settings)
        n_max: Largest n for family checks (default from settings)
        threads: Worker count (default: settings.threads, then CPU count)
        include_stretch: Also run checks that need a raised order cap
    """
    settings = settings or get_settings()
    order = settings.default_order if order is None else order
    n_max = settings.default_nmax if n_max is None else n_max
    checks = select_checks(pattern, include_stretch)
    if not checks:
        logger.info("suite %r: no checks selected", pattern)
        return Report(suite=pattern, order=order, nmax=n_max, results=[])

    for modulus, needed in sorted(_table_orders(checks, order, n_max, settings).items()):
        logger.debug("pre-building b_%d mod %d through %d", modulus, modulus, needed)
        modular_table(modulus, needed, settings)

    workers = threads or settings.threads or os.cpu_count() or 1
    workers = max(1, min(workers, len(checks)))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_reported, check, order, n_max, settings) for check in checks]
        results: List[CheckResult] = [future.result() for future in futures]

    report = Report(suite=pattern, order=order, nmax=n_max, results=results)
    logger.info(
        "suite %r: %d checks, %d failed",
        pattern,
        len(results),
        len(report.failures()),
    )
    return report
