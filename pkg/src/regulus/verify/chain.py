"""Iterating a self-similar dissection relation"""

from typing import List, Tuple


def progression_chain(lead: int, tail: int, modulus: int, steps: int) -> List[Tuple[int, int]]:
    """
    Coefficients after repeated extraction of a relation

    Start from U(G) = lead*G + tail*E (mod modulus), where U extracts the
    q^{mn+r} terms, G = sum b(n) q^n and E = sum b(n) q^{mn+r}. Since U(E) = G,
    applying U to x*G + y*E gives (lead*x + y)*G + (tail*x)*E. Entry j holds
    (x, y) after j + 1 extractions.

    Examples:
        >>> progression_chain(3, 2, 13, 4)
        [(3, 2), (11, 6), (0, 9), (9, 0)]
    """
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    x, y = lead % modulus, tail % modulus
    chain = [(x, y)]
    for _ in range(steps - 1):
        x, y = (lead * x + y) % modulus, (tail * x) % modulus
        chain.append((x, y))
    return chain
