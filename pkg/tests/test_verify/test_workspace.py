"""Tests for the series workspace and evaluation context"""

import pytest

from regulus.config import Settings
from regulus.exceptions import InsufficientOrderError
from regulus.models import CoefficientRing
from regulus.series import (
    SepticQuotient,
    euler_product,
    rr_quotient,
    septic_quotient,
    series_dilate,
    series_invert,
    series_mul,
)
from regulus.verify import EvalContext, SeriesWorkspace

EXACT = CoefficientRing.exact()


class TestSeriesWorkspace:
    """Tests for SeriesWorkspace"""

    def setup_method(self):
        """Set up test fixtures"""
        self.ws = SeriesWorkspace(100, EXACT)

    def test_euler_symbols(self):
        """Test f<k> symbols"""
        assert self.ws.base("f1") == euler_product(1, 100)
        assert self.ws.base("f25") == euler_product(25, 100)

    def test_dilated_symbols(self):
        """Test that R5 is R(q^5) and A7 is A(q^7)"""
        assert self.ws.base("R5") == series_dilate(rr_quotient(20), 5, 100)
        assert self.ws.base("A7") == series_dilate(
            septic_quotient(SepticQuotient.A, 15), 7, 100
        )
        assert self.ws.base("R") == rr_quotient(100)

    def test_unknown_symbol(self):
        """Test that unrecognised symbols raise"""
        with pytest.raises(ValueError, match="unknown series symbol"):
            self.ws.base("g2")

    def test_powers(self):
        """Test positive, zero and negative exponents"""
        f1 = euler_product(1, 100)
        assert self.ws.power("f1", 0) == self.ws.one()
        assert self.ws.power("f1", 2) == series_mul(f1, f1)
        assert self.ws.power("f1", -1) == series_invert(f1)
        assert self.ws.power("f1", -2) == series_mul(series_invert(f1), series_invert(f1))

    def test_powers_are_memoised(self):
        """Test that a power is built once"""
        assert self.ws.power("A", -3) is self.ws.power("A", -3)

    def test_product(self):
        """Test f_1^6 / f_5^6 as a product of symbol powers"""
        expected = series_mul(self.ws.power("f1", 6), self.ws.power("f5", -6))
        assert self.ws.product({"f1": 6, "f5": -6}) == expected

    def test_monomial_beyond_order(self):
        """Test that q^k with k >= order vanishes"""
        assert self.ws.monomial(3, 100, {"f1": 1}).nonzero_count() == 0

    def test_polynomial(self):
        """Test 2 - q^3 f_1"""
        poly = self.ws.polynomial([(2, 0, {}), (-1, 3, {"f1": 1})])
        assert poly.to_list()[:6] == [2, 0, 0, -1, 1, 1]

    def test_order_must_be_positive(self):
        """Test that empty workspaces are rejected"""
        with pytest.raises(ValueError):
            SeriesWorkspace(0, EXACT)


class TestEvalContext:
    """Tests for EvalContext"""

    def setup_method(self):
        """Set up test fixtures"""
        self.settings = Settings()

    def test_gf_only_mod_l(self):
        """Test that the b_l table needs a modular ring"""
        context = EvalContext(50, EXACT, self.settings)
        with pytest.raises(ValueError):
            context.gf()

    def test_workspaces_cached_per_order(self):
        """Test one workspace per order"""
        context = EvalContext(50, CoefficientRing.mod(13), self.settings)
        assert context.ws() is context.ws(50)
        assert context.ws(10).order == 10

    def test_empty_order(self):
        """Test that an extraction with nothing left raises"""
        context = EvalContext(50, CoefficientRing.mod(13), self.settings)
        with pytest.raises(InsufficientOrderError):
            context.ws(0)
