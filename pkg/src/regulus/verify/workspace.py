"""Named series building blocks shared by the checks of one evaluation"""

import logging
import re
from typing import Dict, Mapping, Sequence, Tuple

from regulus.models import CoefficientRing
from regulus.series import (
    SepticQuotient,
    TruncSeries,
    euler_product,
    one,
    rr_quotient,
    septic_quotient,
    series_dilate,
    series_invert,
    series_mul,
    series_pow,
    series_scale,
    series_shift,
    zero,
)

logger = logging.getLogger(__name__)

# f<k> is the Euler product f_k; R, A, B, C optionally carry a dilation: R5 = R(q^5)
_SYMBOL = re.compile(r"^(?P<head>[fRABC])(?P<k>\d*)$")

# (coefficient, power of q, {symbol: exponent})
Term = Tuple[int, int, Mapping[str, int]]


class SeriesWorkspace:
    """
    Series known through a common order over one coefficient ring

    Base series and their integer powers are memoised, so a check that uses
    A^-9 and A^-10 builds A^-1 once. Negative exponents go through the inverse.
    """

    def __init__(self, order: int, ring: CoefficientRing):
        if order < 1:
            raise ValueError(f"order must be >= 1, got {order}")
        self.order = order
        self.ring = ring
        self._bases: Dict[str, TruncSeries] = {}
        self._powers: Dict[Tuple[str, int], TruncSeries] = {}

    def at_order(self, order: int) -> "SeriesWorkspace":
        """A fresh workspace over the same ring"""
        return SeriesWorkspace(order, self.ring)

    def one(self) -> TruncSeries:
        return one(self.ring, self.order)

    def base(self, symbol: str) -> TruncSeries:
        """
        Resolve a symbol to its series

        Args:
            symbol: f<k> (Euler product f_k), R, A, B, C, or one of the
                latter followed by a dilation factor (R5 is R(q^5))

        Raises:
            ValueError: If the symbol is not recognised
        """
        cached = self._bases.get(symbol)
        if cached is not None:
            return cached
        match = _SYMBOL.match(symbol)
        if match is None:
            raise ValueError(f"unknown series symbol: {symbol!r}")
        head, digits = match.group("head"), match.group("k")
        k = int(digits) if digits else 1
        if head == "f":
            series = euler_product(k, self.order, self.ring)
        else:
            inner = -(-self.order // k)
            if head == "R":
                series = rr_quotient(inner, self.ring)
            else:
                series = septic_quotient(SepticQuotient(head), inner, self.ring)
            if k > 1:
                series = series_dilate(series, k, self.order)
        self._bases[symbol] = series
        return series

    def power(self, symbol: str, exponent: int) -> TruncSeries:
        """symbol^exponent, memoised"""
        if exponent == 0:
            return self.one()
        key = (symbol, exponent)
        cached = self._powers.get(key)
        if cached is not None:
            return cached
        if exponent == -1:
            result = series_invert(self.base(symbol))
        elif exponent < 0:
            result = series_pow(self.power(symbol, -1), -exponent)
        else:
            result = series_pow(self.base(symbol), exponent)
        self._powers[key] = result
        return result

    def product(self, factors: Mapping[str, int]) -> TruncSeries:
        """Product of symbol powers, e.g. {"f1": 18, "f5": -2}"""
        result = self.one()
        for symbol, exponent in factors.items():
            if exponent:
                result = series_mul(result, self.power(symbol, exponent))
        return result

    def monomial(self, coefficient: int, q_power: int, factors: Mapping[str, int]) -> TruncSeries:
        """coefficient * q^q_power * product(factors)"""
        if q_power >= self.order:
            return zero(self.ring, self.order)
        body = series_shift(self.product(factors), q_power)
        return body if coefficient == 1 else series_scale(body, coefficient)

    def polynomial(self, terms: Sequence[Term]) -> TruncSeries:
        """Sum of monomials"""
        total = zero(self.ring, self.order)
        for coefficient, q_power, factors in terms:
            total = total + self.monomial(coefficient, q_power, factors)
        return total
