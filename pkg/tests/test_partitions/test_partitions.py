"""Tests for l-regular partition counting"""

import threading

import pytest
from sympy import npartitions

from regulus.config import Settings
from regulus.exceptions import NotPrimeError, OutOfDeskScaleError
from regulus.models import CoefficientRing
from regulus.partitions import (
    ModularTableCache,
    b_oracle,
    b_oracle_table,
    b_value,
    modular_table,
    partition_numbers_mod,
    regular_gf,
    regular_gf_mod,
)
from regulus.series import euler_product, series_mod, series_pow


class TestRegularGf:
    """Tests for the exact generating function"""

    def test_constant_term(self):
        """Test b_l(0) = 1"""
        assert regular_gf(5, 10)[0] == 1

    def test_unrestricted_below_l(self):
        """Test b_13(n) = p(n) for n < 13"""
        assert regular_gf(13, 6).to_list() == [1, 1, 2, 3, 5, 7]
        assert regular_gf(13, 13).to_list() == [npartitions(n) for n in range(13)]

    def test_odd_parts(self):
        """Test b_2(5) = 3"""
        assert regular_gf(2, 6)[5] == 3

    def test_oracle_agreement(self):
        """Test regular_gf against the DP oracle for l = 2..25, n <= 200"""
        for l in range(2, 26):
            assert regular_gf(l, 201).to_list() == b_oracle_table(l, 200), f"l={l}"

    def test_positive(self):
        """Test b_l(n) >= 1"""
        assert min(regular_gf(3, 300).to_list()) >= 1

    def test_invalid_l(self):
        """Test that l must be at least 2"""
        with pytest.raises(ValueError):
            regular_gf(1, 10)


class TestRegularGfMod:
    """Tests for the modular generating function"""

    def test_partition_numbers_mod(self):
        """Test p(n) mod 23 against sympy"""
        table = partition_numbers_mod(23, 300)
        assert table.to_list() == [npartitions(n) % 23 for n in range(300)]

    @pytest.mark.parametrize("l", [13, 17, 23])
    def test_agrees_with_exact(self, l):
        """Test regular_gf_mod(l) = regular_gf(l) mod l at N = 2000"""
        assert regular_gf_mod(l, 2000) == series_mod(regular_gf(l, 2000), l)

    @pytest.mark.parametrize("l", [13, 17, 23])
    def test_power_congruence(self, l):
        """Test sum b_l(n) q^n = f_1^{l-1} (mod l)"""
        ring = CoefficientRing.mod(l)
        assert regular_gf_mod(l, 2000) == series_pow(euler_product(1, 2000, ring), l - 1)

    def test_not_prime(self):
        """Test that composite l is rejected"""
        with pytest.raises(NotPrimeError, match="not prime"):
            regular_gf_mod(15, 100)

    def test_order_cap(self):
        """Test the configured order guard"""
        settings = Settings(max_order=1000)
        with pytest.raises(OutOfDeskScaleError) as excinfo:
            regular_gf_mod(13, 1001, settings)
        assert excinfo.value.required == 1001
        assert excinfo.value.cap == 1000


class TestModularTableCache:
    """Tests for ModularTableCache"""

    def setup_method(self):
        """Set up test fixtures"""
        self.cache = ModularTableCache()

    def test_smaller_request_truncates(self):
        """Test that a smaller table is cut from a larger one"""
        big = self.cache.get(13, 500)
        small = self.cache.get(13, 100)
        assert small == big.truncate(100)

    def test_larger_request_rebuilds(self):
        """Test that the cache grows on demand"""
        self.cache.get(17, 100)
        assert self.cache.get(17, 300) == regular_gf_mod(17, 300)

    def test_concurrent_requests(self):
        """Test that concurrent readers see the same table"""
        results = []

        def worker():
            results.append(self.cache.get(23, 400))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        assert len(results) == 8
        assert all(result == results[0] for result in results)

    def test_shared_table(self):
        """Test the module-level cache"""
        assert modular_table(13, 50) == regular_gf_mod(13, 50)


class TestOracle:
    """Tests for the DP oracle and b_value"""

    def test_zero(self):
        """Test b_l(0) = 1"""
        assert b_oracle(7, 0) == 1

    def test_hand_enumeration(self):
        """Test b_2(5) = 3"""
        assert b_oracle(2, 5) == 3

    def test_unrestricted(self):
        """Test b_13(n) = p(n) for n < 13"""
        assert [b_oracle(13, n) for n in range(13)] == [npartitions(n) for n in range(13)]

    def test_negative_n(self):
        """Test that n must be non-negative"""
        with pytest.raises(ValueError):
            b_oracle(2, -1)

    def test_b_value_exact(self):
        """Test exact b_l(n)"""
        assert b_value(13, 0) == 1
        assert b_value(2, 5) == 3
        assert b_value(5, 150) == b_oracle(5, 150)

    def test_b_value_mod(self):
        """Test b_l(n) mod l"""
        assert b_value(13, 150, modular=True) == b_oracle(13, 150) % 13

    def test_b_value_caps(self):
        """Test that the exact and modular caps are enforced"""
        settings = Settings(exact_cap=100, mod_cap=1000)
        with pytest.raises(OutOfDeskScaleError, match="cap is 100 .*REGULUS_EXACT_CAP") as excinfo:
            b_value(13, 101, settings=settings)
        assert (excinfo.value.required, excinfo.value.cap) == (101, 100)
        with pytest.raises(OutOfDeskScaleError, match="n 1001 required, cap is 1000 ") as excinfo:
            b_value(13, 1001, modular=True, settings=settings)
        assert excinfo.value.cap == 1000
        assert b_value(13, 100, settings=settings) == b_oracle(13, 100)
