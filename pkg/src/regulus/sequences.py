"""The sequences a(k), a'(k) behind the 23-regular congruences

Both satisfy x(k+1) = 4x(k) + 11x(k-1), whose characteristic roots are 2 +- sqrt(15).
They are evaluated two ways: a closed form in Q(sqrt 15) and the integer recurrence.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from sympy import Matrix

from regulus.exceptions import SequenceIntegrityError
from regulus.models import SequencePair

RADICAND = 15
STEP = (4, 11)
MODULUS = 23
PERIOD = 12

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class QuadElem:
    """Exact element x + y*sqrt(15) with rational components"""

    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def of(cls, value: Union["QuadElem", Rational]) -> "QuadElem":
        if isinstance(value, QuadElem):
            return value
        return cls(Fraction(value))

    def __add__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        other = QuadElem.of(other)
        return QuadElem(self.x + other.x, self.y + other.y)

    __radd__ = __add__

    def __neg__(self) -> "QuadElem":
        return QuadElem(-self.x, -self.y)

    def __sub__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        return self + (-QuadElem.of(other))

    def __rsub__(self, other: Rational) -> "QuadElem":
        return QuadElem.of(other) - self

    def __mul__(self, other: Union["QuadElem", Rational]) -> "QuadElem":
        other = QuadElem.of(other)
        return QuadElem(
            self.x * other.x + RADICAND * self.y * other.y,
            self.x * other.y + other.x * self.y,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "QuadElem":
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        result, base = QuadElem(Fraction(1)), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.x, -self.y)

    @property
    def is_integer(self) -> bool:
        return self.y == 0 and self.x.denominator == 1

    def to_int(self) -> int:
        """
        Integer value of the element

        Raises:
            SequenceIntegrityError: If the element is not a rational integer
        """
        if not self.is_integer:
            raise SequenceIntegrityError(f"{self} is not an integer")
        return int(self.x)

    def __str__(self) -> str:
        return f"{self.x} + {self.y}*sqrt({RADICAND})"


SQRT15 = QuadElem(Fraction(0), Fraction(1))
ROOT = 2 + SQRT15


def closed_form(k: int) -> SequencePair:
    """
    a(k) and a'(k) from their closed forms

    a(k)  = (1/2 - sqrt15/15)(2+sqrt15)^k + (1/2 + sqrt15/15)(2-sqrt15)^k
    a'(k) = (sqrt15/30)(2+sqrt15)^k - (sqrt15/30)(2-sqrt15)^k

    Examples:
        >>> closed_form(2)
        SequencePair(k=2, a=11, a_prime=4)
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    up = ROOT**k
    down = up.conjugate()
    lead = Fraction(1, 2) - SQRT15 * Fraction(1, 15)
    a = lead * up + lead.conjugate() * down
    a_prime = SQRT15 * Fraction(1, 30) * (up - down)
    return SequencePair(k=k, a=a.to_int(), a_prime=a_prime.to_int())


def recurrence_pair(k_max: int) -> List[SequencePair]:
    """
    (a(k), a'(k)) for k = 0..k_max from x(k+1) = 4x(k) + 11x(k-1)

    The seeds are taken from closed_form at k = 0 and 1.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    seeds = [closed_form(0), closed_form(1)]
    a = [seeds[0].a, seeds[1].a]
    a_prime = [seeds[0].a_prime, seeds[1].a_prime]
    lead, tail = STEP
    for k in range(1, k_max):
        a.append(lead * a[k] + tail * a[k - 1])
        a_prime.append(lead * a_prime[k] + tail * a_prime[k - 1])
    return [SequencePair(k=k, a=a[k], a_prime=a_prime[k]) for k in range(k_max + 1)]


def aprime_vanishing(k_max: int, modulus: int = MODULUS, period: int = PERIOD) -> List[bool]:
    """
    Entry k says whether a'(period*k) = 0 (mod modulus)

    Raises:
        SequenceIntegrityError: If a'(12k) = 14 a'(12(k-1)) (mod 23) fails for some k,
            i.e. the period scaling does not hold
    """
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    values = [pair.a_prime % modulus for pair in recurrence_pair(max(1, period * k_max))]
    factor = period_multiplier(period, modulus)
    for k in range(1, k_max + 1):
        if factor is None or values[period * k] != factor * values[period * (k - 1)] % modulus:
            raise SequenceIntegrityError(
                f"a'({period * k}) does not scale a'({period * (k - 1)}) by {factor} mod {modulus}"
            )
    return [values[period * k] == 0 for k in range(k_max + 1)]


def period_multiplier(period: int = PERIOD, modulus: int = MODULUS) -> Optional[int]:
    """
    Scalar c with M^period = c*I (mod modulus) for the companion matrix M of the recurrence

    Returns None when M^period is not scalar modulo ``modulus``.

    Examples:
        >>> period_multiplier(12, 23)
        14
    """
    lead, tail = STEP
    power = (Matrix([[lead, tail], [1, 0]]) ** period).applyfunc(lambda v: int(v) % modulus)
    if power[0, 1] != 0 or power[1, 0] != 0 or power[0, 0] != power[1, 1]:
        return None
    return int(power[0, 0])


def collapse_chain(period: int = PERIOD, modulus: int = MODULUS) -> List[Tuple[int, int, int]]:
    """
    Unroll x(period) = c*x(j) + d*x(j-1) (mod modulus) for j = period-1 down to 1

    Each step substitutes x(j) = 4x(j-1) + 11x(j-2). Returns (j, c, d) triples; for
    period 12 and modulus 23 the last one is (1, 0, 14), i.e. a'(12) = 14 a'(0).
    """
    lead, tail = STEP
    c, d = lead % modulus, tail % modulus
    chain = [(period - 1, c, d)]
    for j in range(period - 2, 0, -1):
        c, d = (lead * c + d) % modulus, (tail * c) % modulus
        chain.append((j, c, d))
    return chain


def exact_quotient(numerator: int, denominator: int) -> int:
    """
    numerator / denominator, which must divide exactly

    Raises:
        ValueError: If the division leaves a remainder
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ValueError(f"{numerator} is not divisible by {denominator}")
    return quotient


def lemma_offset(k: int) -> int:
    """
    11(5^{2k} - 1)/12, the offset of the k-th progression

    Examples:
        >>> [lemma_offset(k) for k in (1, 2, 3)]
        [22, 572, 14322]
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return exact_quotient(11 * (5 ** (2 * k) - 1), 12)
