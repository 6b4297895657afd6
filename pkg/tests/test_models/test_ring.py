"""Tests for coefficient ring and dissection models"""

import numpy as np
import pytest
from pydantic import ValidationError

from regulus.models import CoefficientRing, DissectionSpec, RingKind


class TestCoefficientRing:
    """Tests for CoefficientRing model"""

    def test_exact(self):
        """Test the exact integer ring"""
        ring = CoefficientRing.exact()
        assert ring.kind == RingKind.EXACT
        assert ring.is_exact
        assert ring.modulus is None
        assert ring.dtype is object
        assert str(ring) == "ZZ"

    def test_mod(self):
        """Test residues modulo 13"""
        ring = CoefficientRing.mod(13)
        assert ring.kind == RingKind.MOD
        assert not ring.is_exact
        assert ring.dtype is np.int64
        assert str(ring) == "Z/13Z"

    def test_mod_requires_modulus(self):
        """Test that a MOD ring without modulus is rejected"""
        with pytest.raises(ValidationError, match="modulus is required"):
            CoefficientRing(kind=RingKind.MOD)

    def test_exact_rejects_modulus(self):
        """Test that an exact ring cannot carry a modulus"""
        with pytest.raises(ValidationError, match="must be None"):
            CoefficientRing(kind=RingKind.EXACT, modulus=7)

    def test_modulus_bounds(self):
        """Test that moduli must be in [2, 2^31)"""
        with pytest.raises(ValidationError):
            CoefficientRing.mod(1)
        with pytest.raises(ValidationError):
            CoefficientRing.mod(2**31)
        assert CoefficientRing.mod(2**31 - 1).modulus == 2**31 - 1

    def test_rings_are_hashable_values(self):
        """Test equal rings hash equal"""
        assert CoefficientRing.mod(17) == CoefficientRing.mod(17)
        assert hash(CoefficientRing.mod(17)) == hash(CoefficientRing.mod(17))
        assert CoefficientRing.mod(17) != CoefficientRing.mod(23)

    def test_canonical_reduces_big_integers(self):
        """Test that arbitrary-precision values reduce before narrowing"""
        ring = CoefficientRing.mod(23)
        array = ring.canonical([10**30, -1])
        assert array.dtype == np.int64
        assert array.tolist() == [10**30 % 23, 22]

    def test_element(self):
        """Test canonical single elements"""
        assert CoefficientRing.mod(13).element(-1) == 12
        assert CoefficientRing.exact().element(-1) == -1

    def test_unit_inverse(self):
        """Test units of Z and Z/13Z"""
        assert CoefficientRing.exact().unit_inverse(-1) == -1
        assert CoefficientRing.exact().unit_inverse(2) is None
        assert CoefficientRing.mod(13).unit_inverse(2) == 7
        assert CoefficientRing.mod(12).unit_inverse(4) is None


class TestDissectionSpec:
    """Tests for DissectionSpec model"""

    def test_valid(self):
        """Test a valid progression"""
        spec = DissectionSpec(m=7, r=3)
        assert (spec.m, spec.r) == (7, 3)

    def test_residue_out_of_range(self):
        """Test that r must be below m"""
        with pytest.raises(ValidationError, match="must be < m"):
            DissectionSpec(m=5, r=5)

    def test_negative_residue(self):
        """Test that r must be non-negative"""
        with pytest.raises(ValidationError):
            DissectionSpec(m=5, r=-1)

    def test_compose(self):
        """Test extracting 7n+3 twice selects 49n+24"""
        assert DissectionSpec(m=7, r=3).compose(DissectionSpec(m=7, r=3)) == DissectionSpec(
            m=49, r=24
        )
