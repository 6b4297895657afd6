"""Congruence families for b_13, b_17 and b_23

Offsets are computed with exact integer division so that large k never
truncates silently.
"""

from typing import List

from regulus.models import CongruenceClaim, ProgressionTerm
from regulus.sequences import closed_form, exact_quotient, lemma_offset

THIRTEEN_ZERO_RESIDUES = (0, 1, 2, 4, 5, 6)
SEVENTEEN_ZERO_RESIDUES = (0, 1, 2, 4)
TWENTYTHREE_ZERO_RESIDUES = (0, 1, 2, 3)


def theorem13_claim(k: int, multiplier: int = 2) -> CongruenceClaim:
    """
    b_13(7^{4k} n + (7^{4k} - 1)/2) = multiplier^k b_13(n) (mod 13)

    Examples:
        >>> theorem13_claim(1).to_display_string()
        'b_13(2401n + 1200) = 2*b_13(n) (mod 13)'
    """
    stride = 7 ** (4 * k)
    return CongruenceClaim.scalar(
        13,
        stride,
        exact_quotient(stride - 1, 2),
        pow(multiplier, k, 13),
        description=f"13-regular family, k={k}",
    )


def theorem13_zero_claim(r: int, k: int = 0) -> CongruenceClaim:
    """b_13(7^{4k+4} n + (7^{4k+3}(2r+1) - 1)/2) = 0 (mod 13) for r != 3"""
    if r not in THIRTEEN_ZERO_RESIDUES:
        raise ValueError(f"r must be one of {THIRTEEN_ZERO_RESIDUES}, got {r}")
    return CongruenceClaim.zero(
        13,
        7 ** (4 * k + 4),
        exact_quotient(7 ** (4 * k + 3) * (2 * r + 1) - 1, 2),
        description=f"13-regular zero family, k={k}, r={r}",
    )


def theorem17_claim(k: int, multiplier: int = 2) -> CongruenceClaim:
    """
    b_17(5^{4k} n + 2(5^{4k} - 1)/3) = multiplier^k b_17(n) (mod 17)

    Examples:
        >>> theorem17_claim(1).B
        416
    """
    stride = 5 ** (4 * k)
    return CongruenceClaim.scalar(
        17,
        stride,
        exact_quotient(2 * (stride - 1), 3),
        pow(multiplier, k, 17),
        description=f"17-regular family, k={k}",
    )


def theorem17_zero_claim(r: int, k: int = 0) -> CongruenceClaim:
    """b_17(5^{4k+4} n + (5^{4k+3}(3r+1) - 2)/3) = 0 (mod 17) for r in {0, 1, 2, 4}"""
    if r not in SEVENTEEN_ZERO_RESIDUES:
        raise ValueError(f"r must be one of {SEVENTEEN_ZERO_RESIDUES}, got {r}")
    return CongruenceClaim.zero(
        17,
        5 ** (4 * k + 4),
        exact_quotient(5 ** (4 * k + 3) * (3 * r + 1) - 2, 3),
        description=f"17-regular zero family, k={k}, r={r}",
    )


def _terms(pairs: List[ProgressionTerm]) -> List[ProgressionTerm]:
    return [term for term in pairs if term.coefficient]


def lemma23_claim(k: int) -> CongruenceClaim:
    """
    b_23(5^{2k} n + 11(5^{2k} - 1)/12) = a'(k) b_23(25n + 22) + a(k) b_23(n) (mod 23)

    Right-hand terms with a zero coefficient are dropped.
    """
    pair = closed_form(k).reduced(23)
    rhs = _terms(
        [
            ProgressionTerm(coefficient=pair.a_prime, stride=25, offset=22),
            ProgressionTerm(coefficient=pair.a),
        ]
    )
    return CongruenceClaim(
        l=23,
        A=5 ** (2 * k),
        B=lemma_offset(k),
        rhs=rhs,
        description=f"23-regular two-progression family, k={k}",
    )


def theorem23_claim(k: int) -> CongruenceClaim:
    """b_23(5^{24k} n + 11(5^{24k} - 1)/12) = a(12k) b_23(n) (mod 23)"""
    pair = closed_form(12 * k).reduced(23)
    return CongruenceClaim(
        l=23,
        A=5 ** (24 * k),
        B=lemma_offset(12 * k),
        rhs=_terms([ProgressionTerm(coefficient=pair.a)]),
        description=f"23-regular family, k={k}",
    )


def theorem23_zero_claim(r: int, k: int = 0) -> CongruenceClaim:
    """b_23(5^{24k+24} n + (5^{24k+23}(12r+7) - 11)/12) = 0 (mod 23) for r in {0, 1, 2, 3}"""
    if r not in TWENTYTHREE_ZERO_RESIDUES:
        raise ValueError(f"r must be one of {TWENTYTHREE_ZERO_RESIDUES}, got {r}")
    return CongruenceClaim.zero(
        23,
        5 ** (24 * k + 24),
        exact_quotient(5 ** (24 * k + 23) * (12 * r + 7) - 11, 12),
        description=f"23-regular zero family, k={k}, r={r}",
    )
