"""Ramanujan-type congruence claims for b_l(n)"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ProgressionTerm(BaseModel):
    """One term c * b_l(stride*n + offset) of a claim's right-hand side"""

    model_config = ConfigDict(frozen=True)

    coefficient: int = Field(..., ge=0, description="Residue multiplier c")
    stride: int = Field(1, ge=1, description="Progression stride")
    offset: int = Field(0, ge=0, description="Progression offset")

    def index(self, n: int) -> int:
        return self.stride * n + self.offset


class CongruenceClaim(BaseModel):
    """
    b_l(A*n + B) = sum of c_i * b_l(A_i*n + B_i) (mod l) for every n >= 0

    An empty right-hand side states b_l(A*n + B) = 0 (mod l).
    """

    model_config = ConfigDict(frozen=True)

    l: int = Field(..., ge=2, description="Prime modulus")
    A: int = Field(..., ge=1, description="Progression stride (arbitrary precision)")
    B: int = Field(..., ge=0, description="Progression offset (arbitrary precision)")
    rhs: List[ProgressionTerm] = Field(default_factory=list, description="Right-hand side terms")
    description: str = Field("", description="Human-readable statement")

    @model_validator(mode="after")
    def validate_shape(self) -> "CongruenceClaim":
        """Ensure 0 <= B < A and residues are canonical"""
        if self.B >= self.A:
            raise ValueError(f"offset B={self.B} must be < stride A={self.A}")
        for term in self.rhs:
            if term.coefficient >= self.l:
                raise ValueError(
                    f"coefficient {term.coefficient} must be a residue mod {self.l}"
                )
        return self

    @classmethod
    def scalar(cls, l: int, A: int, B: int, c: int, description: str = "") -> "CongruenceClaim":
        """b_l(A*n + B) = c * b_l(n) (mod l)"""
        return cls(
            l=l, A=A, B=B,
            rhs=[ProgressionTerm(coefficient=c % l)],
            description=description,
        )

    @classmethod
    def zero(cls, l: int, A: int, B: int, description: str = "") -> "CongruenceClaim":
        """b_l(A*n + B) = 0 (mod l)"""
        return cls(l=l, A=A, B=B, rhs=[], description=description)

    @property
    def is_zero(self) -> bool:
        return not self.rhs

    def required_order(self, n_max: int) -> int:
        """Order of the generating function needed to test n = 0..n_max"""
        indices = [self.A * n_max + self.B]
        indices.extend(term.index(n_max) for term in self.rhs)
        return max(indices) + 1

    def to_display_string(self) -> str:
        """
        Format the claim as text

        Examples:
            >>> CongruenceClaim.scalar(13, 2401, 1200, 2).to_display_string()
            'b_13(2401n + 1200) = 2*b_13(n) (mod 13)'
        """
        lhs = f"b_{self.l}({self.A}n + {self.B})"
        if self.is_zero:
            return f"{lhs} = 0 (mod {self.l})"
        parts = []
        for term in self.rhs:
            if term.stride == 1 and term.offset == 0:
                argument = "n"
            elif term.offset == 0:
                argument = f"{term.stride}n"
            else:
                argument = f"{term.stride}n + {term.offset}"
            parts.append(f"{term.coefficient}*b_{self.l}({argument})")
        return f"{lhs} = {' + '.join(parts)} (mod {self.l})"
