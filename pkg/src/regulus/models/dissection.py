"""Arithmetic-progression selector for series dissection"""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class DissectionSpec(BaseModel):
    """Progression m*n + r picked out by the extraction operator"""

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Modulus of the progression")
    r: int = Field(..., ge=0, description="Residue, 0 <= r < m")

    @model_validator(mode="after")
    def validate_residue(self) -> "DissectionSpec":
        """Ensure the residue lies in [0, m)"""
        if self.r >= self.m:
            raise ValueError(f"residue r={self.r} must be < m={self.m}")
        return self

    def compose(self, inner: "DissectionSpec") -> "DissectionSpec":
        """
        Progression selected by extracting ``inner`` after ``self``

        Examples:
            >>> DissectionSpec(m=7, r=3).compose(DissectionSpec(m=7, r=3))
            DissectionSpec(m=49, r=24)
        """
        return DissectionSpec(m=self.m * inner.m, r=self.m * inner.r + self.r)
