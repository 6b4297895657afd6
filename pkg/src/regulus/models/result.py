"""Verification outcomes and suite reports"""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, field_serializer


class CheckStatus(str, Enum):
    """Outcome of a single check"""
    PASS = "pass"
    FAIL = "fail"


class Mismatch(BaseModel):
    """Smallest exponent (or family index) where the two sides differ"""

    exponent: int = Field(..., ge=0, description="First mismatching exponent or index n")
    lhs: int = Field(..., description="Left-hand coefficient")
    rhs: int = Field(..., description="Right-hand coefficient")

    @field_serializer("lhs", "rhs")
    def serialize_coefficient(self, value: int) -> str:
        """Coefficients travel as decimal strings so no precision is lost"""
        return str(value)


class CheckParams(BaseModel):
    """Parameters a check ran with"""

    order: Optional[int] = Field(None, description="Order of the base generating function")
    modulus: Optional[int] = Field(None, description="Coefficient modulus (None = exact)")
    n_max: Optional[int] = Field(None, description="Largest n tested by a family check")
    verified_through: Optional[int] = Field(
        None, description="Largest exponent or index actually compared"
    )


class CheckResult(BaseModel):
    """Outcome of one named verification"""

    name: str = Field(..., description="Registry name")
    equation: str = Field("", description="Source display the check restates")
    status: CheckStatus = Field(..., description="pass or fail")
    first_mismatch: Optional[Mismatch] = Field(None, description="Witness for a failure")
    elapsed_ms: int = Field(0, ge=0, description="Wall time in milliseconds")
    params: CheckParams = Field(default_factory=CheckParams)
    note: Optional[str] = Field(None, description="Why the check could not be evaluated")

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_display_string(self) -> str:
        """One-line summary"""
        head = f"{self.status.value.upper()} {self.name}"
        if self.first_mismatch is not None:
            m = self.first_mismatch
            head += f" @ {m.exponent}: {m.lhs} != {m.rhs}"
        elif self.note:
            head += f": {self.note}"
        return f"{head} ({self.elapsed_ms} ms)"


class Report(BaseModel):
    """Aggregated results of a suite run"""

    suite: str = Field(..., description="Filter pattern the suite ran with")
    order: int = Field(..., ge=0, description="Base truncation order")
    nmax: Optional[int] = Field(None, description="n_max for family checks")
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """Vacuously true for an empty suite"""
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]
