"""Truncated q-series arithmetic, special series and dissection"""

from .modseries import (
    TruncSeries,
    zero,
    one,
    monomial,
    from_coefficients,
    series_add,
    series_sub,
    series_neg,
    series_scale,
    series_truncate,
    series_mul,
    series_pow,
    series_invert,
    series_shift,
    series_dilate,
    series_mod,
    series_equal,
)
from .etatheta import (
    SepticQuotient,
    pentagonal_terms,
    euler_product,
    euler_product_by_expansion,
    theta2,
    rr_quotient,
    septic_quotient,
)
from .dissect import extract, embed

__all__ = [
    "TruncSeries",
    "zero",
    "one",
    "monomial",
    "from_coefficients",
    "series_add",
    "series_sub",
    "series_neg",
    "series_scale",
    "series_truncate",
    "series_mul",
    "series_pow",
    "series_invert",
    "series_shift",
    "series_dilate",
    "series_mod",
    "series_equal",
    "SepticQuotient",
    "pentagonal_terms",
    "euler_product",
    "euler_product_by_expansion",
    "theta2",
    "rr_quotient",
    "septic_quotient",
    "extract",
    "embed",
]
