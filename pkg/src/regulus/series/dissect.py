"""Extraction of an arithmetic progression of coefficients, and its inverse embedding"""

from typing import Optional

from regulus.models import DissectionSpec
from .modseries import TruncSeries


def _spec(spec: Optional[DissectionSpec], m: Optional[int], r: Optional[int]) -> DissectionSpec:
    if spec is not None:
        return spec
    if m is None or r is None:
        raise ValueError("either a DissectionSpec or both m and r are required")
    return DissectionSpec(m=m, r=r)


def extract(
    s: TruncSeries,
    spec: Optional[DissectionSpec] = None,
    *,
    m: Optional[int] = None,
    r: Optional[int] = None,
) -> TruncSeries:
    """
    Keep the terms q^{mn+r}, divide by q^r and substitute q -> q^{1/m}

    Returns:
        Series with coeffs[n] = s.coeffs[m*n + r] and order ceil((order(s) - r) / m)

    Examples:
        >>> from regulus.series.modseries import from_coefficients
        >>> extract(from_coefficients([0, 1, 0, 2, 0, 0, 0, 0, 3]), m=5, r=3).to_list()
        [2, 3]
    """
    spec = _spec(spec, m, r)
    picked = s.coeffs[spec.r :: spec.m].copy()
    return TruncSeries._wrap(s.ring, picked)


def embed(
    t: TruncSeries,
    spec: Optional[DissectionSpec] = None,
    order: Optional[int] = None,
    *,
    m: Optional[int] = None,
    r: Optional[int] = None,
) -> TruncSeries:
    """
    Place t.coeffs[n] at q^{mn+r}, zeros elsewhere

    The order is min(order, m*order(t) + r): beyond that the coefficients of t
    needed to fill the progression are unknown.
    """
    spec = _spec(spec, m, r)
    known = spec.m * t.order + spec.r
    limit = known if order is None else min(order, known)
    array = t.ring.zeros(limit)
    if limit > spec.r:
        count = -(-(limit - spec.r) // spec.m)
        array[spec.r :: spec.m] = t.coeffs[:count]
    return TruncSeries._wrap(t.ring, array)
