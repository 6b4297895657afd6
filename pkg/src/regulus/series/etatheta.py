"""Euler products, two-parameter theta series and the level-5/level-7 quotients"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from regulus.models import CoefficientRing
from .modseries import TruncSeries, series_invert, series_mul

logger = logging.getLogger(__name__)

_EXACT = CoefficientRing.exact()


class SepticQuotient(str, Enum):
    """Theta quotients with denominator f(-q^2) governing the 7-dissection of f_1"""
    A = "A"
    B = "B"
    C = "C"


# (a, b) with numerator f(-q^a, -q^b)
SEPTIC_PARAMETERS = {
    SepticQuotient.A: (3, 4),
    SepticQuotient.B: (2, 5),
    SepticQuotient.C: (1, 6),
}


def pentagonal_terms(limit: int) -> Iterator[Tuple[int, int]]:
    """
    Yield (exponent, sign) of f_1 = sum_j (-1)^j q^{j(3j-1)/2} below q^limit

    Examples:
        >>> list(pentagonal_terms(8))
        [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)]
    """
    if limit <= 0:
        return
    yield 0, 1
    j = 1
    while True:
        sign = -1 if j % 2 else 1
        low = j * (3 * j - 1) // 2
        high = j * (3 * j + 1) // 2
        if low >= limit:
            return
        yield low, sign
        if high < limit:
            yield high, sign
        j += 1


def _validate_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")


@lru_cache(maxsize=256)
def euler_product(k: int, order: int, ring: CoefficientRing = _EXACT) -> TruncSeries:
    """
    f_k = prod_{i>=1} (1 - q^{ki}) through q^{order-1}

    Built from the pentagonal number theorem at q^k, so only O(sqrt(order/k))
    coefficients are nonzero.

    Raises:
        ValueError: If k < 1 or order < 1
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _validate_order(order)
    array = ring.zeros(order)
    for exponent, sign in pentagonal_terms(-(-order // k)):
        if k * exponent < order:
            array[k * exponent] = ring.element(sign)
    return TruncSeries._wrap(ring, array)


@lru_cache(maxsize=64)
def theta2(a: int, b: int, order: int, ring: CoefficientRing = _EXACT) -> TruncSeries:
    """
    f(-q^a, -q^b) = sum_n (-1)^n q^{a n(n+1)/2 + b n(n-1)/2}

    Walks n = 0, -1, 1, -2, 2, ... and stops once both exponents reach ``order``.
    """
    if a < 1 or b < 1:
        raise ValueError(f"theta parameters must be >= 1, got a={a}, b={b}")
    _validate_order(order)
    totals = [0] * order
    totals[0] = 1
    n = 1
    while True:
        sign = -1 if n % 2 else 1
        positive = a * n * (n + 1) // 2 + b * n * (n - 1) // 2
        negative = a * n * (n - 1) // 2 + b * n * (n + 1) // 2
        if positive >= order and negative >= order:
            break
        if positive < order:
            totals[positive] += sign
        if negative < order:
            totals[negative] += sign
        n += 1
    return TruncSeries(ring, totals)


def _binomial_product(exponents: List[int], order: int, ring: CoefficientRing) -> TruncSeries:
    """prod (1 - q^e) over the given positive exponents"""
    array = ring.zeros(order)
    array[0] = 1
    for e in exponents:
        if e >= order:
            continue
        array[e:] = array[e:] - array[: order - e]
        if not ring.is_exact:
            array[e:] %= ring.modulus
    return TruncSeries._wrap(ring, array)


@lru_cache(maxsize=32)
def rr_quotient(order: int, ring: CoefficientRing = _EXACT) -> TruncSeries:
    """
    R(q) = prod_{n>=1} (1-q^{5n-4})(1-q^{5n-1}) / ((1-q^{5n-3})(1-q^{5n-2}))

    Both products are truncated to factors with exponent < order.
    """
    _validate_order(order)
    numerator = [e for e in range(1, order) if e % 5 in (1, 4)]
    denominator = [e for e in range(1, order) if e % 5 in (2, 3)]
    top = _binomial_product(numerator, order, ring)
    bottom = _binomial_product(denominator, order, ring)
    logger.debug("built R(q) through q^%d over %s", order - 1, ring)
    return series_mul(top, series_invert(bottom))


@lru_cache(maxsize=64)
def septic_quotient(
    which: SepticQuotient, order: int, ring: CoefficientRing = _EXACT
) -> TruncSeries:
    """
    A = f(-q^3,-q^4)/f(-q^2), B = f(-q^2,-q^5)/f(-q^2), C = f(-q,-q^6)/f(-q^2)

    f(-q^2) is taken as the Euler product f_2.
    """
    _validate_order(order)
    a, b = SEPTIC_PARAMETERS[SepticQuotient(which)]
    numerator = theta2(a, b, order, ring)
    return series_mul(numerator, series_invert(euler_product(2, order, ring)))


def euler_product_by_expansion(
    k: int, order: int, ring: Optional[CoefficientRing] = None
) -> TruncSeries:
    """Direct O(order^2) expansion of prod (1 - q^{ki}); cross-check for the pentagonal shortcut"""
    ring = ring or _EXACT
    _validate_order(order)
    return _binomial_product(list(range(k, order, k)), order, ring)
