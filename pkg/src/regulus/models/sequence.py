"""Integer sequences attached to the 23-regular congruences"""

from pydantic import BaseModel, ConfigDict, Field


class SequencePair(BaseModel):
    """Values a(k) and a'(k) at one index"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0, description="Index")
    a: int = Field(..., description="a(k)")
    a_prime: int = Field(..., description="a'(k)")

    def reduced(self, modulus: int) -> "SequencePair":
        """Both values reduced to canonical residues"""
        return SequencePair(k=self.k, a=self.a % modulus, a_prime=self.a_prime % modulus)
