"""Tests for truncated series arithmetic"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regulus.exceptions import (
    IncompatibleRingsError,
    InsufficientOrderError,
    NonInvertibleSeriesError,
)
from regulus.models import CoefficientRing
from regulus.series import (
    euler_product,
    from_coefficients,
    monomial,
    one,
    series_equal,
    series_invert,
    series_mod,
    series_mul,
    series_pow,
    series_shift,
    series_truncate,
    zero,
)
from tests.test_series.strategies import (
    EXACT,
    exact_pairs,
    exact_series,
    exact_triples,
    mod_series,
)

MOD13 = CoefficientRing.mod(13)


class TestTruncSeries:
    """Tests for the TruncSeries value type"""

    def test_mod_coefficients_are_canonical(self):
        """Test that residues are stored in [0, m)"""
        s = from_coefficients([-1, 14, 26, -27], MOD13)
        assert s.to_list() == [12, 1, 0, 12]

    def test_coefficients_are_read_only(self):
        """Test that the coefficient array cannot be mutated"""
        s = from_coefficients([1, 2, 3])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5

    def test_truncate(self):
        """Test forgetting the top coefficients"""
        s = from_coefficients([1, 2, 3, 4])
        assert s.truncate(2).to_list() == [1, 2]

    def test_truncate_beyond_order_rejected(self):
        """Test that truncation cannot invent coefficients"""
        with pytest.raises(InsufficientOrderError):
            from_coefficients([1, 2]).truncate(3)

    def test_from_coefficients_pads(self):
        """Test zero padding up to the requested order"""
        assert from_coefficients([1, -1], order=4).to_list() == [1, -1, 0, 0]

    def test_equality_requires_same_ring(self):
        """Test that exact and modular series never compare equal"""
        assert from_coefficients([1, 1]) != from_coefficients([1, 1], MOD13)


class TestAddition:
    """Tests for series_add and friends"""

    def test_cancellation(self):
        """Test (1+q) + (1-q) = 2"""
        total = from_coefficients([1, 1]) + from_coefficients([1, -1])
        assert total.to_list() == [2, 0]

    def test_zero_is_identity(self):
        """Test s + 0 = s"""
        s = from_coefficients([3, -1, 4, 1])
        assert s + zero(EXACT, 4) == s

    def test_doubling_matches_scalar(self):
        """Test f_1 + f_1 = 2 f_1"""
        f1 = euler_product(1, 50)
        assert (f1 + f1) == 2 * f1

    def test_result_order_is_minimum(self):
        """Test that the shorter operand bounds the result"""
        total = from_coefficients([1, 2, 3]) + from_coefficients([1, 1])
        assert total.order == 2

    def test_negation_mod(self):
        """Test negation stays canonical"""
        assert (-from_coefficients([1, 0, 5], MOD13)).to_list() == [12, 0, 8]

    def test_ring_mismatch(self):
        """Test that mixing rings raises"""
        with pytest.raises(IncompatibleRingsError, match="incompatible rings"):
            from_coefficients([1]) + from_coefficients([1], MOD13)


class TestMultiplication:
    """Tests for series_mul and series_pow"""

    def test_telescoping(self):
        """Test (1-q) * sum q^n = 1 through q^{N-2}"""
        n = 30
        product = series_mul(from_coefficients([1, -1], order=n), from_coefficients([1] * n))
        assert series_equal(product, one(EXACT, n), n - 2) is None

    def test_binomial_square(self):
        """Test (1+q)^2 = 1 + 2q + q^2"""
        square = series_pow(from_coefficients([1, 1], order=3), 2)
        assert square.to_list() == [1, 2, 1]

    def test_power_zero_and_one(self):
        """Test s^0 = 1 and s^1 = s"""
        s = from_coefficients([2, 3, 5])
        assert series_pow(s, 0) == one(EXACT, 3)
        assert series_pow(s, 1) == s

    def test_negative_power_rejected(self):
        """Test that series_pow needs a non-negative exponent"""
        with pytest.raises(ValueError):
            series_pow(one(EXACT, 3), -1)

    def test_frobenius_mod_13(self):
        """Test f_1^13 = f_13 (mod 13)"""
        order = 2000
        f1 = euler_product(1, order, MOD13)
        assert series_pow(f1, 13) == euler_product(13, order, MOD13)

    def test_large_modulus_lazy_reduction(self):
        """Test that many dense products mod a large prime stay exact"""
        m = 2_147_483_629
        ring = CoefficientRing.mod(m)
        values = [m - 1 - i for i in range(400)]
        s = from_coefficients(values, ring)
        exact = series_mul(from_coefficients(values), from_coefficients(values))
        assert series_mul(s, s) == series_mod(exact, m)

    def test_scalar_operands(self):
        """Test int * series and series * int"""
        s = from_coefficients([1, 2], MOD13)
        assert (7 * s).to_list() == [7, 1]
        assert (s * 7).to_list() == [7, 1]

    @given(exact_pairs())
    @settings(max_examples=1000, deadline=None)
    def test_commutative(self, pair):
        """Test s*t = t*s"""
        s, t = pair
        assert series_mul(s, t) == series_mul(t, s)

    @given(exact_triples())
    @settings(max_examples=1000, deadline=None)
    def test_associative(self, triple):
        """Test (s*t)*u = s*(t*u)"""
        s, t, u = triple
        assert series_mul(series_mul(s, t), u) == series_mul(s, series_mul(t, u))

    @given(exact_triples())
    @settings(max_examples=1000, deadline=None)
    def test_distributive(self, triple):
        """Test s*(t+u) = s*t + s*u"""
        s, t, u = triple
        assert series_mul(s, t + u) == series_mul(s, t) + series_mul(s, u)

    @given(exact_pairs(max_order=32))
    @settings(max_examples=300, deadline=None)
    def test_reduction_commutes(self, pair):
        """Test that reducing before or after add, mul and pow agrees"""
        s, t = pair
        m = 17
        sm, tm = series_mod(s, m), series_mod(t, m)
        assert series_mod(s + t, m) == sm + tm
        assert series_mod(series_mul(s, t), m) == series_mul(sm, tm)
        assert series_mod(series_pow(s, 3), m) == series_pow(sm, 3)


class TestInversion:
    """Tests for series_invert"""

    def test_geometric_series(self):
        """Test 1/(1-q) = sum q^n"""
        inverse = series_invert(from_coefficients([1, -1], order=10))
        assert inverse.to_list() == [1] * 10

    def test_partition_numbers(self):
        """Test 1/f_1 = sum p(n) q^n"""
        assert series_invert(euler_product(1, 6)).to_list() == [1, 1, 2, 3, 5, 7]

    def test_invert_one(self):
        """Test 1/1 = 1"""
        assert series_invert(one(EXACT, 5)) == one(EXACT, 5)

    def test_euler_product_round_trip(self):
        """Test f_1 * (1/f_1) = 1 through q^999"""
        f1 = euler_product(1, 1000)
        assert series_equal(series_mul(f1, series_invert(f1)), one(EXACT, 1000), 999) is None

    def test_non_unit_exact(self):
        """Test that a constant term of 2 is not invertible over the integers"""
        with pytest.raises(NonInvertibleSeriesError, match="non-invertible series"):
            series_invert(from_coefficients([2, 1]))

    def test_non_unit_mod(self):
        """Test that 0 is not invertible mod 13"""
        with pytest.raises(NonInvertibleSeriesError):
            series_invert(from_coefficients([13, 1], MOD13))

    def test_mod_unit_constant(self):
        """Test inversion with a non-trivial unit constant"""
        s = from_coefficients([5, 3, 1, 0, 2], MOD13)
        assert series_mul(s, series_invert(s)) == one(MOD13, 5)

    @given(exact_series(unit=True))
    @settings(max_examples=1000, deadline=None)
    def test_exact_round_trip(self, s):
        """Test s * (1/s) = 1 for unit constant terms"""
        product = series_mul(s, series_invert(s))
        assert series_equal(product, one(EXACT, s.order), s.order - 1) is None

    @given(mod_series(unit=True))
    @settings(max_examples=1000, deadline=None)
    def test_mod_round_trip(self, s):
        """Test s * (1/s) = 1 over Z/mZ"""
        product = series_mul(s, series_invert(s))
        assert series_equal(product, one(s.ring, s.order), s.order - 1) is None


class TestShiftAndReduction:
    """Tests for series_shift and series_mod"""

    def test_shift_one(self):
        """Test shift(1, 3) = q^3"""
        assert series_shift(one(EXACT, 5), 3) == monomial(1, 3, EXACT, 5)

    def test_series_truncate(self):
        """Test the functional form of truncation"""
        s = from_coefficients([4, 5, 6])
        assert series_truncate(s, 2).to_list() == [4, 5]
        with pytest.raises(InsufficientOrderError):
            series_truncate(s, 4)

    def test_shift_zero(self):
        """Test shift(s, 0) = s"""
        s = from_coefficients([4, 5, 6])
        assert series_shift(s, 0) == s

    def test_shift_keeps_order(self):
        """Test shift(1+q, 2) = q^2 + q^3"""
        assert series_shift(from_coefficients([1, 1], order=4), 2).to_list() == [0, 0, 1, 1]

    def test_negative_shift_rejected(self):
        """Test that series are never Laurent"""
        with pytest.raises(ValueError):
            series_shift(one(EXACT, 3), -1)

    @given(exact_series(), st.integers(0, 70), st.integers(0, 70))
    @settings(max_examples=200, deadline=None)
    def test_shift_composes(self, s, a, b):
        """Test shift(s, a+b) = shift(shift(s, a), b)"""
        assert series_shift(s, a + b) == series_shift(series_shift(s, a), b)

    def test_mod_canonical(self):
        """Test reducing 1 - q mod 13"""
        assert series_mod(from_coefficients([1, -1]), 13).to_list() == [1, 12]

    def test_mod_kills_multiples(self):
        """Test 13q = 0 (mod 13)"""
        assert series_mod(from_coefficients([0, 13]), 13) == zero(MOD13, 2)

    def test_frobenius_via_mod(self):
        """Test f_1^13 - f_13 reduces to 0 mod 13"""
        order = 2000
        difference = series_pow(euler_product(1, order), 13) - euler_product(13, order)
        assert series_mod(difference, 13) == zero(MOD13, order)


class TestSeriesEqual:
    """Tests for series_equal"""

    def test_equal(self):
        """Test s = s"""
        s = euler_product(1, 101)
        assert series_equal(s, s, 100) is None

    def test_first_mismatch(self):
        """Test 1 against 1 + q"""
        mismatch = series_equal(one(EXACT, 101), from_coefficients([1, 1], order=101), 100)
        assert mismatch is not None
        assert (mismatch.exponent, mismatch.lhs, mismatch.rhs) == (1, 0, 1)

    def test_insufficient_order(self):
        """Test that comparing beyond the known order raises"""
        with pytest.raises(InsufficientOrderError, match="insufficient order"):
            series_equal(one(EXACT, 10), one(EXACT, 20), 10)
