"""Tests for coefficient extraction and embedding"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from regulus.models import CoefficientRing, DissectionSpec
from regulus.series import embed, extract, from_coefficients, series_mod, zero
from tests.test_series.strategies import EXACT, exact_pairs, exact_series


class TestExtract:
    """Tests for extract"""

    def test_index_arithmetic(self):
        """Test extract(q + 2q^3 + 3q^8, m=5, r=3) = 2 + 3q"""
        s = from_coefficients([0, 1, 0, 2, 0, 0, 0, 0, 3])
        assert extract(s, m=5, r=3).to_list() == [2, 3]

    def test_identity_progression(self):
        """Test that m=1, r=0 keeps everything"""
        s = from_coefficients([4, 0, 7, 1])
        assert extract(s, m=1, r=0) == s

    def test_result_order(self):
        """Test order ceil((N - r) / m)"""
        s = zero(EXACT, 2000)
        assert extract(s, m=7, r=3).order == 286
        assert extract(s, m=343, r=171).order == 6

    def test_residue_beyond_order(self):
        """Test that tiny series give an empty extraction"""
        assert extract(zero(EXACT, 3), m=5, r=4).order == 0

    def test_accepts_spec(self):
        """Test passing a DissectionSpec instead of m and r"""
        s = from_coefficients(list(range(20)))
        assert extract(s, DissectionSpec(m=4, r=1)).to_list() == [1, 5, 9, 13, 17]

    def test_requires_progression(self):
        """Test that either a spec or m and r must be given"""
        with pytest.raises(ValueError):
            extract(zero(EXACT, 5), m=5)

    def test_composed_spec(self):
        """Test that extracting twice equals extracting the composed progression"""
        s = from_coefficients(list(range(500)))
        outer, inner = DissectionSpec(m=7, r=3), DissectionSpec(m=7, r=3)
        twice = extract(extract(s, outer), inner)
        assert twice == extract(s, outer.compose(inner))

    @given(exact_pairs(), st.integers(1, 25), st.data())
    @settings(max_examples=300, deadline=None)
    def test_linear(self, pair, m, data):
        """Test extract(s + t) = extract(s) + extract(t)"""
        s, t = pair
        r = data.draw(st.integers(0, m - 1))
        assert extract(s + t, m=m, r=r) == extract(s, m=m, r=r) + extract(t, m=m, r=r)

    @given(exact_series(), st.integers(1, 25), st.data())
    @settings(max_examples=300, deadline=None)
    def test_commutes_with_reduction(self, s, m, data):
        """Test extract(s mod 13) = extract(s) mod 13"""
        r = data.draw(st.integers(0, m - 1))
        assert extract(series_mod(s, 13), m=m, r=r) == series_mod(extract(s, m=m, r=r), 13)


class TestEmbed:
    """Tests for embed"""

    def test_spreads_coefficients(self):
        """Test embed(1+q, m=5, r=3, N=10) = q^3 + q^8"""
        placed = embed(from_coefficients([1, 1]), m=5, r=3, order=10)
        assert placed.to_list() == [0, 0, 0, 1, 0, 0, 0, 0, 1, 0]

    def test_order_limited_by_known_terms(self):
        """Test that embedding never claims coefficients it does not know"""
        placed = embed(from_coefficients([1, 1]), m=5, r=3, order=100)
        assert placed.order == 13

    def test_mod_ring_preserved(self):
        """Test embedding keeps the coefficient ring"""
        ring = CoefficientRing.mod(23)
        placed = embed(from_coefficients([5], ring), m=5, r=4, order=9)
        assert placed.ring == ring
        assert placed[4] == 5

    @given(exact_series(), st.integers(1, 25), st.data())
    @settings(max_examples=1000, deadline=None)
    def test_extract_undoes_embed(self, t, m, data):
        """Test extract(embed(t)) = t"""
        r = data.draw(st.integers(0, m - 1))
        assert extract(embed(t, m=m, r=r), m=m, r=r) == t

    @given(exact_series(), st.integers(1, 25))
    @settings(max_examples=1000, deadline=None)
    def test_partition_of_unity(self, s, m):
        """Test that the m embedded extractions add back up to s"""
        total = zero(EXACT, s.order)
        for r in range(m):
            total = total + embed(extract(s, m=m, r=r), m=m, r=r, order=s.order)
        assert total == s
