"""Concrete check kinds: series identities and congruence families"""

import logging
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from regulus.config import Settings, get_settings
from regulus.exceptions import InsufficientOrderError, OutOfDeskScaleError
from regulus.models import CheckParams, CheckResult, CoefficientRing, CongruenceClaim, Mismatch
from regulus.partitions import modular_table
from regulus.series import TruncSeries, series_equal
from .base import Check
from .workspace import SeriesWorkspace

logger = logging.getLogger(__name__)


class EvalContext:
    """
    What a series identity is evaluated against

    Holds the base order N and the coefficient ring. The generating function
    of b_l mod l is taken from the shared table cache; workspaces are created
    per order so the right-hand side can be built at the (smaller) order of an
    extracted left-hand side.
    """

    def __init__(self, order: int, ring: CoefficientRing, settings: Settings):
        self.order = order
        self.ring = ring
        self.settings = settings
        self._workspaces: Dict[int, SeriesWorkspace] = {}

    def gf(self) -> TruncSeries:
        """sum b_l(n) q^n mod l through the base order"""
        if self.ring.is_exact:
            raise ValueError("the regular-partition generating function is only built mod l")
        return modular_table(self.ring.modulus, self.order, self.settings)

    def ws(self, order: Optional[int] = None) -> SeriesWorkspace:
        order = self.order if order is None else order
        if order < 1:
            raise InsufficientOrderError(0, order)
        workspace = self._workspaces.get(order)
        if workspace is None:
            workspace = SeriesWorkspace(order, self.ring)
            self._workspaces[order] = workspace
        return workspace


Sides = Callable[[EvalContext], Tuple[TruncSeries, TruncSeries]]


class SeriesIdentityCheck(Check):
    """
    Two series that should agree, exactly or modulo a prime

    Both sides are compared through the largest exponent they both know.
    """

    def __init__(
        self,
        name: str,
        equation: str,
        sides: Sides,
        modulus: Optional[int] = None,
    ):
        super().__init__(name, equation)
        self._sides = sides
        self._modulus = modulus

    @property
    def modulus(self) -> Optional[int]:
        return self._modulus

    def ring(self) -> CoefficientRing:
        if self._modulus is None:
            return CoefficientRing.exact()
        return CoefficientRing.mod(self._modulus)

    def evaluate(
        self, order: int, n_max: int, settings: Settings
    ) -> Tuple[Optional[Mismatch], CheckParams]:
        if order > settings.max_order:
            raise OutOfDeskScaleError(order, settings.max_order)
        context = EvalContext(order, self.ring(), settings)
        lhs, rhs = self._sides(context)
        available = min(lhs.order, rhs.order)
        through = available - 1
        if through < 0:
            raise InsufficientOrderError(0, available)
        mismatch = series_equal(lhs, rhs, through)
        params = CheckParams(order=order, modulus=self._modulus, verified_through=through)
        return mismatch, params


def compare_family(
    claim: CongruenceClaim, n_max: int, settings: Settings
) -> Tuple[Optional[Mismatch], CheckParams]:
    """
    Test the claim for n = 0..n_max against one table of b_l mod l

    Raises:
        OutOfDeskScaleError: If the table would exceed settings.max_order
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    required = claim.required_order(n_max)
    if required > settings.max_order:
        raise OutOfDeskScaleError(required, settings.max_order)

    table = modular_table(claim.l, required, settings).coeffs
    n = np.arange(n_max + 1, dtype=np.int64)
    lhs = table[n * claim.A + claim.B]
    rhs = np.zeros(n_max + 1, dtype=np.int64)
    for term in claim.rhs:
        rhs = (rhs + term.coefficient * table[n * term.stride + term.offset]) % claim.l

    differing = np.flatnonzero(lhs != rhs)
    mismatch = None
    if differing.shape[0]:
        first = int(differing[0])
        mismatch = Mismatch(exponent=first, lhs=int(lhs[first]), rhs=int(rhs[first]))
    params = CheckParams(
        order=required, modulus=claim.l, n_max=n_max, verified_through=n_max
    )
    return mismatch, params


class FamilyCheck(Check):
    """
    A congruence b_l(A*n + B) = ... (mod l) tested coefficient-wise

    ``n_limit`` caps the n range for families whose stride makes the
    suite-wide n_max too expensive.
    """

    def __init__(
        self,
        name: str,
        equation: str,
        claim: CongruenceClaim,
        n_limit: Optional[int] = None,
    ):
        super().__init__(name, equation)
        self.claim = claim
        self.n_limit = n_limit

    @property
    def modulus(self) -> Optional[int]:
        return self.claim.l

    def effective_n_max(self, n_max: int) -> int:
        return n_max if self.n_limit is None else min(n_max, self.n_limit)

    def required_order(self, n_max: int) -> int:
        return self.claim.required_order(self.effective_n_max(n_max))

    def evaluate(
        self, order: int, n_max: int, settings: Settings
    ) -> Tuple[Optional[Mismatch], CheckParams]:
        return compare_family(self.claim, self.effective_n_max(n_max), settings)


def verify_family(
    claim: CongruenceClaim, n_max: int, settings: Optional[Settings] = None
) -> CheckResult:
    """
    Check b_l(A*n + B) against its right-hand side for 0 <= n <= n_max

    A failure carries the first failing n as the mismatch exponent.

    Raises:
        OutOfDeskScaleError: If A*n_max + B is beyond the configured order cap
    """
    settings = settings or get_settings()
    statement = claim.to_display_string()
    check = FamilyCheck(claim.description or statement, statement, claim)
    return check.run(0, n_max, settings)
