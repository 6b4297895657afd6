"""Truncated formal power series over the integers and over Z/mZ"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

import numpy as np

from regulus.exceptions import (
    IncompatibleRingsError,
    InsufficientOrderError,
    NonInvertibleSeriesError,
)
from regulus.models import CoefficientRing, Mismatch

_INT64_MAX = 2**63 - 1

# a series counts as sparse when at most this fraction of its terms is nonzero
_SPARSE_FRACTION = 0.25

Scalar = Union[int, np.integer]


class TruncSeries:
    """
    Power series known through exponent ``order - 1``

    Coefficients live in a read-only numpy array: Python ints for the exact
    ring, canonical int64 residues for Z/mZ. Values are immutable.
    """

    __slots__ = ("_ring", "_coeffs")

    def __init__(self, ring: CoefficientRing, coeffs: Union[np.ndarray, Sequence[int]]):
        array = ring.canonical(coeffs)
        array.flags.writeable = False
        self._ring = ring
        self._coeffs = array

    @classmethod
    def _wrap(cls, ring: CoefficientRing, array: np.ndarray) -> "TruncSeries":
        """Adopt an array that is already canonical for ``ring``"""
        series = cls.__new__(cls)
        array.flags.writeable = False
        series._ring = ring
        series._coeffs = array
        return series

    @property
    def ring(self) -> CoefficientRing:
        return self._ring

    @property
    def order(self) -> int:
        return int(self._coeffs.shape[0])

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array; coeffs[i] is the coefficient of q^i"""
        return self._coeffs

    def __getitem__(self, exponent: int) -> int:
        return int(self._coeffs[exponent])

    def __len__(self) -> int:
        return self.order

    def to_list(self) -> list[int]:
        return [int(c) for c in self._coeffs]

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._coeffs))

    def truncate(self, order: int) -> "TruncSeries":
        """Forget every coefficient from q^order on"""
        if order > self.order:
            raise InsufficientOrderError(order - 1, self.order)
        return TruncSeries._wrap(self._ring, self._coeffs[:order].copy())

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        return series_add(self, other)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return series_sub(self, other)

    def __neg__(self) -> "TruncSeries":
        return series_neg(self)

    def __mul__(self, other: Union["TruncSeries", int]) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, np.integer)):
            return series_scale(self, int(other))
        return NotImplemented

    def __rmul__(self, other: int) -> "TruncSeries":
        if isinstance(other, (int, np.integer)):
            return series_scale(self, int(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "TruncSeries":
        if exponent < 0:
            return series_pow(series_invert(self), -exponent)
        return series_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self._ring == other._ring
            and self.order == other.order
            and self.to_list() == other.to_list()
        )

    def __hash__(self) -> int:
        return hash((self._ring, tuple(self.to_list())))

    def __repr__(self) -> str:
        shown = []
        for exponent, value in enumerate(self._coeffs[:12]):
            if value:
                shown.append(f"{value}*q^{exponent}" if exponent else f"{value}")
        body = " + ".join(shown) if shown else "0"
        return f"TruncSeries({body} + O(q^{self.order}) over {self._ring})"


def _check_rings(s: TruncSeries, t: TruncSeries) -> None:
    if s.ring != t.ring:
        raise IncompatibleRingsError(s.ring, t.ring)


def _reduce(ring: CoefficientRing, array: np.ndarray) -> np.ndarray:
    if ring.is_exact:
        return array
    return np.mod(array, ring.modulus)


def zero(ring: CoefficientRing, order: int) -> TruncSeries:
    return TruncSeries._wrap(ring, ring.zeros(order))


def monomial(coefficient: int, exponent: int, ring: CoefficientRing, order: int) -> TruncSeries:
    """c * q^exponent truncated to ``order``"""
    array = ring.zeros(order)
    if exponent < order:
        array[exponent] = ring.element(coefficient)
    return TruncSeries._wrap(ring, array)


def one(ring: CoefficientRing, order: int) -> TruncSeries:
    return monomial(1, 0, ring, order)


def from_coefficients(
    values: Iterable[int], ring: Optional[CoefficientRing] = None, order: Optional[int] = None
) -> TruncSeries:
    """
    Build a series from a coefficient list, zero-padded up to ``order``

    Examples:
        >>> from_coefficients([1, -1], order=4).to_list()
        [1, -1, 0, 0]
    """
    ring = ring or CoefficientRing.exact()
    values = list(values)
    order = len(values) if order is None else order
    padded = (values + [0] * order)[:order]
    return TruncSeries(ring, padded)


def series_add(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    """Coefficient-wise sum, truncated to the smaller order"""
    _check_rings(s, t)
    n = min(s.order, t.order)
    return TruncSeries._wrap(s.ring, _reduce(s.ring, s.coeffs[:n] + t.coeffs[:n]))


def series_sub(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    _check_rings(s, t)
    n = min(s.order, t.order)
    return TruncSeries._wrap(s.ring, _reduce(s.ring, s.coeffs[:n] - t.coeffs[:n]))


def series_neg(s: TruncSeries) -> TruncSeries:
    return TruncSeries._wrap(s.ring, _reduce(s.ring, -s.coeffs))


def series_scale(s: TruncSeries, c: int) -> TruncSeries:
    """Multiply every coefficient by the integer ``c``"""
    factor = s.ring.element(c)
    return TruncSeries._wrap(s.ring, _reduce(s.ring, s.coeffs * factor))


def series_truncate(s: TruncSeries, order: int) -> TruncSeries:
    return s.truncate(order)


def series_shift(s: TruncSeries, k: int) -> TruncSeries:
    """Multiply by q^k keeping the order; the top k coefficients fall off"""
    if k < 0:
        raise ValueError(f"shift must be non-negative, got {k}")
    array = s.ring.zeros(s.order)
    if k < s.order:
        array[k:] = s.coeffs[: s.order - k]
    return TruncSeries._wrap(s.ring, array)


def series_dilate(s: TruncSeries, k: int, order: Optional[int] = None) -> TruncSeries:
    """
    Substitute q -> q^k

    The result is known through exponent k*order(s) - 1, so its order is
    min(order, k*order(s)).
    """
    if k < 1:
        raise ValueError(f"dilation factor must be >= 1, got {k}")
    limit = k * s.order if order is None else min(order, k * s.order)
    array = s.ring.zeros(limit)
    count = -(-limit // k)
    array[::k] = s.coeffs[:count]
    return TruncSeries._wrap(s.ring, array)


def series_mod(s: TruncSeries, m: int) -> TruncSeries:
    """Reduce an exact series coefficient-wise into Z/mZ"""
    ring = CoefficientRing.mod(m)
    if s.ring.is_exact:
        return TruncSeries(ring, s.coeffs)
    return TruncSeries(ring, s.coeffs.astype(np.int64) % m)


def _sparse_mul_mod(sparse: np.ndarray, dense: np.ndarray, m: int) -> np.ndarray:
    n = dense.shape[0]
    out = np.zeros(n, dtype=np.int64)
    step = (m - 1) * (m - 1)
    bound = 0
    for i in np.flatnonzero(sparse):
        i = int(i)
        value = int(sparse[i])
        if bound + step > _INT64_MAX - step:
            np.mod(out, m, out=out)
            bound = m - 1
        if value == 1:
            out[i:] += dense[: n - i]
        elif value == m - 1:
            out[i:] -= dense[: n - i]
        else:
            out[i:] += value * dense[: n - i]
        bound += step
    return np.mod(out, m)


def _sparse_mul_exact(sparse: np.ndarray, dense: np.ndarray) -> np.ndarray:
    n = dense.shape[0]
    out = np.array([0] * n, dtype=object)
    for i in np.flatnonzero(sparse):
        i = int(i)
        value = sparse[i]
        if value == 1:
            out[i:] += dense[: n - i]
        elif value == -1:
            out[i:] -= dense[: n - i]
        else:
            out[i:] += value * dense[: n - i]
    return out


def series_mul(s: TruncSeries, t: TruncSeries) -> TruncSeries:
    """
    Cauchy product truncated to the smaller order

    The factor with fewer nonzero terms drives the product, so a
    pentagonal-sparse f_k times a dense series costs O(N * sqrt(N)).
    """
    _check_rings(s, t)
    n = min(s.order, t.order)
    a, b = s.coeffs[:n], t.coeffs[:n]
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    if s.ring.is_exact:
        out = _sparse_mul_exact(a, b)
    else:
        out = _sparse_mul_mod(a, b, s.ring.modulus)
    return TruncSeries._wrap(s.ring, out)


def series_pow(s: TruncSeries, e: int) -> TruncSeries:
    """Repeated squaring; s^0 = 1"""
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    result = one(s.ring, s.order)
    base = s
    first = True
    while e:
        if e & 1:
            result = base if first else series_mul(result, base)
            first = False
        e >>= 1
        if e:
            base = series_mul(base, base)
    return result


def _dot_mod(x: np.ndarray, y: np.ndarray, m: int) -> int:
    step = (m - 1) * (m - 1)
    if step == 0:
        return 0
    chunk = max(1, _INT64_MAX // step)
    if x.shape[0] <= chunk:
        return int(np.dot(x, y)) % m
    total = 0
    for start in range(0, x.shape[0], chunk):
        total += int(np.dot(x[start:start + chunk], y[start:start + chunk]))
    return total % m


def series_invert(s: TruncSeries) -> TruncSeries:
    """
    Multiplicative inverse through the same order

    Uses inv[n] = -c0^{-1} * sum_{k=1..n} s[k] * inv[n-k]; the sum runs over
    the nonzero exponents only when s is sparse.

    Raises:
        NonInvertibleSeriesError: If the constant term is not a unit
    """
    ring = s.ring
    n = s.order
    if n == 0:
        return s
    c0 = int(s.coeffs[0])
    c0_inv = ring.unit_inverse(c0)
    if c0_inv is None:
        raise NonInvertibleSeriesError(c0, ring)

    coeffs = s.coeffs
    inverse = ring.zeros(n)
    inverse[0] = c0_inv
    exponents = np.flatnonzero(coeffs[1:]) + 1
    m = ring.modulus

    if exponents.shape[0] <= _SPARSE_FRACTION * n:
        values = coeffs[exponents]
        active = 0
        for i in range(1, n):
            while active < exponents.shape[0] and exponents[active] <= i:
                active += 1
            if active == 0:
                continue
            gathered = inverse[i - exponents[:active]]
            if ring.is_exact:
                total = np.dot(values[:active], gathered)
                inverse[i] = -c0_inv * total
            else:
                total = _dot_mod(values[:active], gathered, m)
                inverse[i] = (-c0_inv * total) % m
    else:
        for i in range(1, n):
            head = coeffs[1:i + 1]
            tail = inverse[i - 1::-1]
            if ring.is_exact:
                inverse[i] = -c0_inv * np.dot(head, tail)
            else:
                inverse[i] = (-c0_inv * _dot_mod(head, tail, m)) % m
    return TruncSeries._wrap(ring, inverse)


def series_equal(s: TruncSeries, t: TruncSeries, through: int) -> Optional[Mismatch]:
    """
    Compare coefficients of q^0 .. q^through

    Returns:
        None when equal, otherwise the smallest mismatching exponent with both values

    Raises:
        InsufficientOrderError: If either series is not known through ``through``
    """
    _check_rings(s, t)
    available = min(s.order, t.order)
    if through >= available:
        raise InsufficientOrderError(through, available)
    left = s.coeffs[: through + 1]
    right = t.coeffs[: through + 1]
    differing = np.flatnonzero(np.asarray(left != right, dtype=bool))
    if differing.shape[0] == 0:
        return None
    index = int(differing[0])
    return Mismatch(exponent=index, lhs=int(left[index]), rhs=int(right[index]))
