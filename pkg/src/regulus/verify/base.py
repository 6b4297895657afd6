"""Base interface for named verification checks"""

import logging
import time
from abc import ABC, abstractmethod
from typing import Optional, Tuple

from regulus.config import Settings, get_settings
from regulus.models import CheckParams, CheckResult, CheckStatus, Mismatch

logger = logging.getLogger(__name__)


class Check(ABC):
    """
    Abstract base class for registry checks

    A check restates one displayed identity or congruence. Running it never
    raises for a false statement: a disagreement is reported as a failed
    CheckResult carrying the first mismatch.
    """

    def __init__(self, name: str, equation: str):
        self.name = name
        self.equation = equation

    @property
    def modulus(self) -> Optional[int]:
        """Coefficient modulus, or None for exact integer checks"""
        return None

    @abstractmethod
    def evaluate(
        self, order: int, n_max: int, settings: Settings
    ) -> Tuple[Optional[Mismatch], CheckParams]:
        """
        Build and compare both sides of the statement

        Args:
            order: Order of the base generating function or product
            n_max: Largest n for family checks
            settings: Runtime caps

        Returns:
            First mismatch (None when the sides agree) and the parameters used

        Raises:
            InsufficientOrderError: If order leaves nothing to compare
            OutOfDeskScaleError: If the statement needs more than the cap allows
        """
        pass

    def run(self, order: int, n_max: int, settings: Optional[Settings] = None) -> CheckResult:
        """Evaluate the check and wrap the outcome with timing"""
        settings = settings or get_settings()
        logger.debug("running %s at order %d", self.name, order)
        started = time.perf_counter()
        mismatch, params = self.evaluate(order, n_max, settings)
        elapsed_ms = int((time.perf_counter() - started) * 1000)
        status = CheckStatus.PASS if mismatch is None else CheckStatus.FAIL
        logger.debug("%s: %s in %d ms", self.name, status.value, elapsed_ms)
        return CheckResult(
            name=self.name,
            equation=self.equation,
            status=status,
            first_mismatch=mismatch,
            elapsed_ms=elapsed_ms,
            params=params,
        )
