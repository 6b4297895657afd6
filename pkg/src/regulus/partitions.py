"""Counting l-regular partitions: generating functions, modular tables and a DP oracle"""

import logging
import threading
import time
from typing import Dict, List, Optional

from sympy import isprime

from regulus.config import Settings, get_settings
from regulus.exceptions import NotPrimeError, OutOfDeskScaleError
from regulus.models import CoefficientRing
from regulus.series import TruncSeries, euler_product, series_invert, series_mul

logger = logging.getLogger(__name__)


def _check_order(order: int) -> None:
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")


def regular_gf(l: int, order: int) -> TruncSeries:
    """
    Exact b_l(0..order-1) as f_l / f_1

    Examples:
        >>> regular_gf(2, 6).to_list()
        [1, 1, 1, 2, 2, 3]
    """
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    _check_order(order)
    return series_mul(euler_product(l, order), series_invert(euler_product(1, order)))


def partition_numbers_mod(m: int, order: int) -> TruncSeries:
    """p(n) mod m for n < order through the pentagonal-number recurrence"""
    _check_order(order)
    ring = CoefficientRing.mod(m)
    return series_invert(euler_product(1, order, ring))


def regular_gf_mod(l: int, order: int, settings: Optional[Settings] = None) -> TruncSeries:
    """
    b_l(n) mod l for n < order

    p(n) mod l comes from the pentagonal recurrence and is then multiplied by
    the pentagonal-sparse f_l, so the cost is O(order * sqrt(order)).

    Raises:
        NotPrimeError: If l is not prime
        OutOfDeskScaleError: If order exceeds the configured cap
    """
    if not isprime(l):
        raise NotPrimeError(l)
    _check_order(order)
    settings = settings or get_settings()
    if order > settings.max_order:
        raise OutOfDeskScaleError(order, settings.max_order)

    started = time.perf_counter()
    ring = CoefficientRing.mod(l)
    table = series_mul(euler_product(l, order, ring), partition_numbers_mod(l, order))
    logger.debug(
        "b_%d mod %d through q^%d in %.2fs", l, l, order - 1, time.perf_counter() - started
    )
    return table


class ModularTableCache:
    """
    Shared b_l mod l tables, grown on demand

    A request is served from the largest table built so far, truncated to the
    requested order. Tables are immutable once published; a per-modulus lock
    keeps concurrent requests from building the same table twice.
    """

    def __init__(self) -> None:
        self._tables: Dict[int, TruncSeries] = {}
        self._locks: Dict[int, threading.Lock] = {}
        self._guard = threading.Lock()

    def _lock_for(self, l: int) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(l, threading.Lock())

    def get(self, l: int, order: int, settings: Optional[Settings] = None) -> TruncSeries:
        """b_l mod l through q^{order-1}"""
        cached = self._tables.get(l)
        if cached is not None and cached.order >= order:
            return cached if cached.order == order else cached.truncate(order)
        with self._lock_for(l):
            cached = self._tables.get(l)
            if cached is None or cached.order < order:
                logger.debug("building b_%d mod %d table of order %d", l, l, order)
                cached = regular_gf_mod(l, order, settings)
                self._tables[l] = cached
        return cached if cached.order == order else cached.truncate(order)

    def clear(self) -> None:
        with self._guard:
            self._tables.clear()


_TABLES = ModularTableCache()


def modular_table(l: int, order: int, settings: Optional[Settings] = None) -> TruncSeries:
    """Cached b_l mod l through q^{order-1}"""
    return _TABLES.get(l, order, settings)


def b_oracle_table(l: int, n_max: int) -> List[int]:
    """
    b_l(0..n_max) by dynamic programming over the parts not divisible by l

    Independent of the series code; exact integers throughout.
    """
    ways = [1] + [0] * n_max
    for part in range(1, n_max + 1):
        if part % l == 0:
            continue
        for total in range(part, n_max + 1):
            ways[total] += ways[total - part]
    return ways


def b_oracle(l: int, n: int) -> int:
    """
    Number of partitions of n with no part divisible by l

    Examples:
        >>> b_oracle(2, 5)
        3
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return b_oracle_table(l, n)[n]


def b_value(l: int, n: int, modular: bool = False, settings: Optional[Settings] = None) -> int:
    """
    b_l(n) exactly, or b_l(n) mod l

    Raises:
        OutOfDeskScaleError: If n exceeds the exact or modular cap
    """
    settings = settings or get_settings()
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if modular:
        cap, setting = settings.mod_cap, "REGULUS_MOD_CAP"
    else:
        cap, setting = settings.exact_cap, "REGULUS_EXACT_CAP"
    if n > cap:
        raise OutOfDeskScaleError(n, cap, setting, quantity="n")
    if modular:
        return modular_table(l, n + 1, settings)[n]
    return regular_gf(l, n + 1)[n]
