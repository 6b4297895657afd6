"""Coefficient rings for truncated power series"""

from enum import Enum
from typing import Any, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

# m * m must stay well inside int64 so lazy reduction has headroom
MAX_MODULUS = 2**31


class RingKind(str, Enum):
    """Kind of coefficient ring"""
    EXACT = "exact"
    MOD = "mod"


class CoefficientRing(BaseModel):
    """Exact integers, or residues modulo a machine-word modulus"""

    model_config = ConfigDict(frozen=True)

    kind: RingKind = Field(..., description="Exact integers or residues mod m")
    modulus: Optional[int] = Field(
        None,
        ge=2,
        lt=MAX_MODULUS,
        description="Modulus m (only for MOD rings)",
    )

    @model_validator(mode="after")
    def validate_modulus(self) -> "CoefficientRing":
        """Ensure a modulus is present exactly for MOD rings"""
        if self.kind == RingKind.MOD and self.modulus is None:
            raise ValueError("modulus is required for MOD rings")
        if self.kind == RingKind.EXACT and self.modulus is not None:
            raise ValueError("modulus must be None for EXACT rings")
        return self

    @classmethod
    def exact(cls) -> "CoefficientRing":
        """Arbitrary-precision integers"""
        return cls(kind=RingKind.EXACT)

    @classmethod
    def mod(cls, modulus: int) -> "CoefficientRing":
        """Residues modulo ``modulus``"""
        return cls(kind=RingKind.MOD, modulus=modulus)

    @property
    def is_exact(self) -> bool:
        return self.kind == RingKind.EXACT

    @property
    def dtype(self) -> Any:
        """numpy dtype used to store coefficients"""
        return object if self.is_exact else np.int64

    def zeros(self, length: int) -> np.ndarray:
        """Fresh zero coefficient array"""
        if self.is_exact:
            return np.array([0] * length, dtype=object)
        return np.zeros(length, dtype=np.int64)

    def canonical(self, values: Any) -> np.ndarray:
        """
        Convert values to a canonical coefficient array

        Args:
            values: Sequence or array of integers

        Returns:
            New array; residues in [0, m) for MOD rings, Python ints for EXACT
        """
        if self.is_exact:
            return np.array([int(v) for v in values], dtype=object)
        array = np.asarray(values)
        if array.dtype == object:
            # Python ints reduce to [0, m) before narrowing to int64
            return np.asarray(array % self.modulus).astype(np.int64)
        return np.mod(array.astype(np.int64, copy=False), self.modulus)

    def element(self, value: int) -> int:
        """Canonical representative of a single integer"""
        if self.is_exact:
            return int(value)
        return int(value) % self.modulus

    def unit_inverse(self, value: int) -> Optional[int]:
        """Multiplicative inverse of ``value``, or None if it is not a unit"""
        if self.is_exact:
            if value in (1, -1):
                return int(value)
            return None
        try:
            return pow(int(value), -1, self.modulus)
        except ValueError:
            return None

    def __str__(self) -> str:
        if self.is_exact:
            return "ZZ"
        return f"Z/{self.modulus}Z"
