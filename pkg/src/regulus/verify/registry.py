"""Registry of named checks

Each entry restates one displayed identity, proof step or theorem instance.
Identities built from R, A, B, C and Euler products are exact; everything
involving b_l is checked modulo l. Quotients are realised by series inversion.
"""

from typing import Callable, Dict, List, Optional, Sequence, Tuple

from regulus.config import Settings, get_settings
from regulus.exceptions import UnknownCheckError
from regulus.models import CheckResult
from regulus.series import TruncSeries, embed, extract, series_mul, series_shift
from .base import Check
from .chain import progression_chain
from .checks import EvalContext, FamilyCheck, SeriesIdentityCheck
from .claims import (
    SEVENTEEN_ZERO_RESIDUES,
    THIRTEEN_ZERO_RESIDUES,
    lemma23_claim,
    theorem13_claim,
    theorem13_zero_claim,
    theorem17_claim,
    theorem17_zero_claim,
)
from .workspace import SeriesWorkspace, Term


STRETCH_CHECKS = frozenset({"fam-13-k2", "fam-13-k2-derived"})

Sides = Tuple[TruncSeries, TruncSeries]


def _q(power: int, series: TruncSeries) -> TruncSeries:
    return series_shift(series, power)


# ---------------------------------------------------------------------------
# Rogers-Ramanujan and septic identities (exact)
# ---------------------------------------------------------------------------

# 1/f_1 over f_25^5/f_5^6, as (coefficient, power of q, power of R(q^5))
_RECIPROCAL_QUINTIC = [
    (1, 0, -4), (1, 1, -3), (2, 2, -2), (3, 3, -1), (5, 4, 0),
    (-3, 5, 1), (2, 6, 2), (-1, 7, 3), (1, 8, 4),
]

_P5: List[Term] = [
    (1, 0, {"B": 5, "A": -1, "C": -4}),
    (-1, 0, {"A": 5, "B": -4, "C": -1}),
    (-1, 3, {"C": 5, "A": -4, "B": -1}),
]
_P6: List[Term] = [
    (1, 0, {"A": 1, "B": 2, "C": -3}),
    (1, 1, {"A": 2, "C": 1, "B": -3}),
    (-1, 2, {"B": 1, "C": 2, "A": -3}),
]
_P7: List[Term] = [
    (1, 0, {"A": 3, "B": -1, "C": -2}),
    (-1, 1, {"B": 3, "A": -2, "C": -1}),
    (-1, 2, {"C": 3, "A": -1, "B": -2}),
]
_P8: List[Term] = [
    (1, 0, {"B": 7, "C": -7}),
    (-1, 1, {"A": 7, "B": -7}),
    (1, 5, {"C": 7, "A": -7}),
]


def _id_2_1(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    rhs = ws.polynomial(
        [
            (1, 0, {"f25": 1, "R5": -1}),
            (-1, 1, {"f25": 1}),
            (-1, 2, {"f25": 1, "R5": 1}),
        ]
    )
    return ws.base("f1"), rhs


def _id_2_2(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    rhs = ws.polynomial(
        [(c, e, {"f25": 5, "f5": -6, "R5": r}) for c, e, r in _RECIPROCAL_QUINTIC]
    )
    return ws.power("f1", -1), rhs


def _id_2_3(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    lhs = ws.polynomial([(1, 0, {"R": -5}), (-11, 1, {}), (-1, 2, {"R": 5})])
    return lhs, ws.product({"f1": 6, "f5": -6})


def _id_2_4(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    rhs = ws.polynomial(
        [
            (1, 0, {"f49": 1, "B7": 1, "C7": -1}),
            (-1, 1, {"f49": 1, "A7": 1, "B7": -1}),
            (-1, 2, {"f49": 1}),
            (1, 5, {"f49": 1, "C7": 1, "A7": -1}),
        ]
    )
    return ws.base("f1"), rhs


def _id_2_5(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    return ws.polynomial(_P5), ws.polynomial([(3, 1, {})])


def _id_2_6(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    return ws.polynomial(_P6), ws.polynomial([(1, 0, {"f1": 4, "f7": -4}), (8, 1, {})])


def _id_2_7(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    return ws.polynomial(_P7), ws.polynomial([(1, 0, {"f1": 4, "f7": -4}), (5, 1, {})])


def _id_2_8(ctx: EvalContext) -> Sides:
    ws = ctx.ws()
    rhs = ws.polynomial(
        [(1, 0, {"f1": 8, "f7": -8}), (14, 1, {"f1": 4, "f7": -4}), (57, 2, {})]
    )
    return ws.polynomial(_P8), rhs


# ---------------------------------------------------------------------------
# Generating functions mod l
# ---------------------------------------------------------------------------


def _frobenius(l: int):
    def sides(ctx: EvalContext) -> Sides:
        ws = ctx.ws()
        return ws.power("f1", l), ws.base(f"f{l}")

    return sides


def _gf_power(l: int):
    def sides(ctx: EvalContext) -> Sides:
        return ctx.gf(), ctx.ws().power("f1", l - 1)

    return sides


# ---------------------------------------------------------------------------
# l = 13: the 7-dissection chain
# ---------------------------------------------------------------------------

# sum b_13(7n+3) q^n over f_7^12, one row per power of q
_THIRTEEN_EXPANSION: List[Term] = [
    (1, 0, {"A": 3, "B": 6, "C": -9}),
    (2, 0, {"A": 1, "B": 9, "C": -10}),
    (1, 1, {"A": 10, "B": -8, "C": -2}),
    (9, 1, {"A": 8, "B": -5, "C": -3}),
    (2, 1, {"A": 6, "B": -2, "C": -4}),
    (3, 1, {"A": 4, "B": 1, "C": -5}),
    (1, 1, {"B": 10, "A": -2, "C": -8}),
    (8, 1, {"A": 2, "B": 4, "C": -6}),
    (2, 1, {"B": 7, "C": -7}),
    (-2, 2, {"A": 9, "C": 1, "B": -10}),
    (-2, 2, {"A": 7, "B": -7}),
    (-4, 2, {"A": 5, "B": -4, "C": -1}),
    (9, 2, {"B": 8, "A": -3, "C": -5}),
    (9, 2, {"A": 3, "B": -1, "C": -2}),
    (4, 2, {"B": 5, "A": -1, "C": -4}),
    (12, 2, {"A": 1, "B": 2, "C": -3}),
    (1, 3, {"A": 6, "C": 3, "B": -9}),
    (8, 3, {"A": 4, "C": 2, "B": -6}),
    (2, 3, {"B": 6, "A": -4, "C": -2}),
    (12, 3, {"A": 2, "C": 1, "B": -3}),
    (-9, 3, {"B": 3, "A": -2, "C": -1}),
    (9, 3, {}),
    (3, 4, {"B": 4, "C": 1, "A": -5}),
    (-12, 4, {"B": 1, "C": 2, "A": -3}),
    (-3, 4, {"A": 1, "C": 4, "B": -5}),
    (-9, 4, {"C": 3, "A": -1, "B": -2}),
    (8, 5, {"B": 2, "C": 4, "A": -6}),
    (-4, 5, {"C": 5, "A": -4, "B": -1}),
    (2, 5, {"C": 6, "A": -2, "B": -4}),
    (-1, 6, {"B": 3, "C": 6, "A": -9}),
    (2, 6, {"C": 7, "A": -7}),
    (-9, 6, {"C": 8, "A": -5, "B": -3}),
    (1, 7, {"C": 10, "A": -8, "B": -2}),
    (-2, 7, {"B": 1, "C": 9, "A": -10}),
]


def _thirteen_lhs(ctx: EvalContext) -> Tuple[TruncSeries, SeriesWorkspace]:
    lhs = extract(ctx.gf(), m=7, r=3)
    return lhs, ctx.ws(lhs.order)


def _t13_expand(ctx: EvalContext) -> Sides:
    lhs, ws = _thirteen_lhs(ctx)
    return lhs, series_mul(ws.power("f7", 12), ws.polynomial(_THIRTEEN_EXPANSION))


def _thirteen_combination(
    ws: SeriesWorkspace,
    p5: TruncSeries,
    p6: TruncSeries,
    p7: TruncSeries,
    p8: TruncSeries,
) -> TruncSeries:
    """The 7-dissection regrouped into the four theta combinations, times f_7^12"""
    def q(power: int) -> TruncSeries:
        return ws.polynomial([(1, power, {})])

    body = 2 * (p8 * p6 - _q(1, p7 * (p5 - q(1))))
    body = body + (p6 * p6 * p6 - 3 * _q(1, p7 * p6) - 3 * q(3))
    body = body + _q(1, p5 * p5 + 2 * _q(1, p5) + 2 * (p6 * p7) + 6 * q(2))
    body = body + 2 * _q(1, p8)
    body = body + 8 * _q(1, p6 * p6 - 2 * _q(1, p7))
    body = body + 3 * _q(1, _q(1, p5) + p6 * p7 + 3 * q(2))
    body = body + 2 * _q(1, p7 * p7 + 2 * _q(1, p6))
    body = body + 9 * _q(1, p6 * p6 - p7 * (p5 + q(1)))
    body = body + 4 * _q(2, p5) + 12 * _q(2, p6) + 9 * _q(2, p7) + 9 * q(3)
    return series_mul(ws.power("f7", 12), body)


def _chain_13_regrouped(ctx: EvalContext) -> Sides:
    lhs, ws = _thirteen_lhs(ctx)
    parts = [ws.polynomial(terms) for terms in (_P5, _P6, _P7, _P8)]
    return lhs, _thirteen_combination(ws, *parts)


def _chain_13_substituted(ctx: EvalContext) -> Sides:
    lhs, ws = _thirteen_lhs(ctx)
    x = {"f1": 4, "f7": -4}
    p5 = ws.polynomial([(3, 1, {})])
    p6 = ws.polynomial([(1, 0, x), (8, 1, {})])
    p7 = ws.polynomial([(1, 0, x), (5, 1, {})])
    p8 = ws.polynomial([(1, 0, {"f1": 8, "f7": -8}), (1, 1, x), (5, 2, {})])
    return lhs, _thirteen_combination(ws, p5, p6, p7, p8)


def thirteen_key_sides(lead: int = 3, tail: int = 2):
    """sum b_13(7n+3) q^n against lead*f_1^12 + tail*q^3*f_7^12"""

    def sides(ctx: EvalContext) -> Sides:
        lhs, ws = _thirteen_lhs(ctx)
        rhs = ws.polynomial([(lead, 0, {"f1": 12}), (tail, 3, {"f7": 12})])
        return lhs, rhs

    return sides


# Selectors map G = sum b_l(n) q^n to the series a chain step refers to
Selector = Callable[[TruncSeries], TruncSeries]


def _whole(gf: TruncSeries) -> TruncSeries:
    return gf


def _picked(m: int, r: int) -> Selector:
    """sum b_l(m n + r) q^n"""
    return lambda gf: extract(gf, m=m, r=r)


def _spread(m: int, r: int) -> Selector:
    """sum b_l(n) q^{m n + r}, known through the order of G"""
    return lambda gf: embed(gf, m=m, r=r, order=gf.order)


def _thirteen_step(m: int, r: int, lead: int, tail: int):
    """sum b_13(m n + r) q^n against lead*G + tail*sum b_13(n) q^{7n+3}"""

    def sides(ctx: EvalContext) -> Sides:
        gf = ctx.gf()
        return extract(gf, m=m, r=r), lead * gf + tail * _spread(7, 3)(gf)

    return sides


def _chain_13_7_2_a(ctx: EvalContext) -> Sides:
    gf = ctx.gf()
    return extract(gf, m=49, r=24), 3 * extract(gf, m=7, r=3) + 2 * gf


# ---------------------------------------------------------------------------
# l = 17 and l = 23: the 5-dissection chains
# ---------------------------------------------------------------------------


def _quintic_expand(l: int, r: int, coefficients: Sequence[int]):
    """
    sum b_l(5n+r) q^{5n+r} against f_25^{l-1} * sum_j c_j q^{r+5j} R(q^5)^{5j-h}

    h is half the span of the R(q^5) powers, so they run from -h to h.
    """
    top = 5 * (len(coefficients) - 1)

    def sides(ctx: EvalContext) -> Sides:
        gf = ctx.gf()
        lhs = embed(extract(gf, m=5, r=r), m=5, r=r, order=gf.order)
        ws = ctx.ws(lhs.order)
        terms = [
            (c, r + 5 * j, {"f25": l - 1, "R5": 5 * j - top // 2})
            for j, c in enumerate(coefficients)
        ]
        return lhs, ws.polynomial(terms)

    return sides


def _rr_form(l: int, r: int, terms: Sequence[Tuple[int, int, int]]):
    """
    sum b_l(5n+r) q^n against f_5^{l-1} * sum c q^e S^p with S = 1/R^5 - 11q - q^2 R^5

    ``terms`` holds (c, e, p).
    """

    def sides(ctx: EvalContext) -> Sides:
        lhs = extract(ctx.gf(), m=5, r=r)
        ws = ctx.ws(lhs.order)
        s = ws.polynomial([(1, 0, {"R": -5}), (-11, 1, {}), (-1, 2, {"R": 5})])
        body = ws.polynomial([])
        for c, e, p in terms:
            body = body + c * _q(e, s**p)
        return lhs, series_mul(ws.power("f5", l - 1), body)

    return sides


def _eta_step(
    lhs_of: Selector,
    terms: Sequence[Term],
    tail: Sequence[Tuple[int, Selector]],
):
    """
    One step of a dissection chain

    The left side is ``lhs_of`` applied to G = sum b_l(n) q^n. The right side
    is the eta-quotient polynomial ``terms``, built at the order of the left
    side, plus c * selector(G) for every (c, selector) in ``tail``.
    """

    def sides(ctx: EvalContext) -> Sides:
        gf = ctx.gf()
        lhs = lhs_of(gf)
        rhs = ctx.ws(lhs.order).polynomial(terms)
        for c, select in tail:
            rhs = rhs + c * select(gf)
        return lhs, rhs

    return sides


def _k11_series(gf: TruncSeries) -> TruncSeries:
    """18 * sum b_23(25n+22) q^n + 20 * sum b_23(n) q^n"""
    return 18 * extract(gf, m=25, r=22) + 20 * gf


def _k11_picked(gf: TruncSeries) -> TruncSeries:
    return extract(_k11_series(gf), m=5, r=2)


def _chain_23_k11_a(ctx: EvalContext) -> Sides:
    gf = ctx.gf()
    lhs = _k11_series(gf)
    ws = ctx.ws(lhs.order)
    rhs = ws.polynomial(
        [
            (21, 2, {"f1": 10, "f5": 12}),
            (3, 3, {"f1": 4, "f5": 18}),
            (13, 4, {"f5": 24, "f1": -2}),
        ]
    )
    return lhs, rhs + gf


def _t23_final(ctx: EvalContext) -> Sides:
    gf = ctx.gf()
    shifted = extract(gf, m=5, r=2)
    ws = ctx.ws(shifted.order)
    lhs = ws.polynomial(
        [
            (21, 0, {"f1": 24, "f5": -2}),
            (6, 1, {"f1": 18, "f5": 4}),
            (6, 2, {"f1": 12, "f5": 10}),
        ]
    )
    return lhs + shifted, 14 * embed(gf, m=5, r=4, order=gf.order)


# eta-quotient monomials reused by the 5-dissection steps
_F18 = {"f1": 18, "f5": -2}
_F12 = {"f1": 12, "f5": 4}
_F6 = {"f1": 6, "f5": 10}
_F24 = {"f1": 24, "f5": -2}
_F18_23 = {"f1": 18, "f5": 4}
_F12_23 = {"f1": 12, "f5": 10}
_G10 = {"f1": 10, "f5": 12}
_G4 = {"f1": 4, "f5": 18}
_GINV = {"f5": 24, "f1": -2}

_SEVENTEEN_TRIPLE = [(1, 0, 3), (12, 1, 2), (14, 2, 1), (7, 3, 0)]
_TWENTYTHREE_QUAD = [(2, 0, 4), (17, 1, 3), (17, 2, 2), (14, 4, 0)]

_SEVENTEEN_QUINTIC = [1, 13, 8, -1, -8, 13, -1]
_TWENTYTHREE_QUINTIC = [2, 21, 3, 8, -1, -8, 3, -21, 2]


def _build() -> Dict[str, Check]:
    checks: List[Check] = []

    def identity(name: str, equation: str, sides, modulus: Optional[int] = None) -> None:
        checks.append(SeriesIdentityCheck(name, equation, sides, modulus=modulus))

    def family(name: str, claim, n_limit: Optional[int] = None) -> None:
        checks.append(
            FamilyCheck(name, claim.to_display_string(), claim, n_limit=n_limit)
        )

    identity("id-2.1", "f_1 = f_25 (1/R(q^5) - q - q^2 R(q^5))", _id_2_1)
    identity("id-2.2", "1/f_1 = f_25^5/f_5^6 (1/R(q^5)^4 + ... + q^8 R(q^5)^4)", _id_2_2)
    identity("id-2.3", "1/R^5 - 11q - q^2 R^5 = f_1^6/f_5^6", _id_2_3)
    identity(
        "id-2.4",
        "f_1 = f_49 (B(q^7)/C(q^7) - q A(q^7)/B(q^7) - q^2 + q^5 C(q^7)/A(q^7))",
        _id_2_4,
    )
    identity("id-2.5", "B^5/(AC^4) - A^5/(B^4C) - q^3C^5/(A^4B) = 3q", _id_2_5)
    identity("id-2.6", "AB^2/C^3 + qA^2C/B^3 - q^2BC^2/A^3 = f_1^4/f_7^4 + 8q", _id_2_6)
    identity("id-2.7", "A^3/(BC^2) - qB^3/(A^2C) - q^2C^3/(AB^2) = f_1^4/f_7^4 + 5q", _id_2_7)
    identity(
        "id-2.8",
        "B^7/C^7 - qA^7/B^7 + q^5C^7/A^7 = f_1^8/f_7^8 + 14q f_1^4/f_7^4 + 57q^2",
        _id_2_8,
    )
    for l in (13, 17, 23):
        identity(f"frob-{l}", f"f_1^{l} = f_{l} (mod {l})", _frobenius(l), l)

    # l = 13
    identity("t13-gf", "sum b_13(n) q^n = f_1^12 (mod 13)", _gf_power(13), 13)
    identity("t13-expand", "sum b_13(7n+3) q^n = f_7^12 P(A, B, C) (mod 13)", _t13_expand, 13)
    identity(
        "chain-13-regrouped",
        "sum b_13(7n+3) q^n in terms of the four theta combinations (mod 13)",
        _chain_13_regrouped,
        13,
    )
    identity(
        "chain-13-substituted",
        "sum b_13(7n+3) q^n with the theta combinations replaced by eta quotients (mod 13)",
        _chain_13_substituted,
        13,
    )
    identity(
        "t13-key",
        "sum b_13(7n+3) q^n = 3f_1^12 + 2q^3 f_7^12 (mod 13)",
        thirteen_key_sides(),
        13,
    )
    identity(
        "t13-6.2",
        "sum b_13(7n+3) q^n = 3 sum b_13(n) q^n + 2 sum b_13(n) q^{7n+3} (mod 13)",
        _thirteen_step(7, 3, 3, 2),
        13,
    )
    identity(
        "chain-13-7^2-a",
        "sum b_13(49n+24) q^n = 3 sum b_13(7n+3) q^n + 2 sum b_13(n) q^n (mod 13)",
        _chain_13_7_2_a,
        13,
    )
    identity(
        "chain-13-7^2-b",
        "sum b_13(49n+24) q^n = 11 sum b_13(n) q^n + 6 sum b_13(n) q^{7n+3} (mod 13)",
        _thirteen_step(49, 24, 11, 6),
        13,
    )
    identity(
        "t13-6.3",
        "sum b_13(343n+171) q^n = 2 sum b_13(n) q^{7n+3} (mod 13)",
        _thirteen_step(343, 171, 0, 2),
        13,
    )
    lead, tail = progression_chain(3, 2, 13, 3)[-1]
    identity(
        "chain-13-7^3-derived",
        f"sum b_13(343n+171) q^n = {lead} sum b_13(n) q^n + {tail} sum b_13(n) q^{{7n+3}} (mod 13)",
        _thirteen_step(343, 171, lead, tail),
        13,
    )

    # l = 17
    identity("t17-gf", "sum b_17(n) q^n = f_1^16 (mod 17)", _gf_power(17), 17)
    identity(
        "t17-quintic-expand",
        "sum b_17(5n+1) q^{5n+1} = f_25^16 (q/R(q^5)^15 + 13q^6/R(q^5)^10 + ...) (mod 17)",
        _quintic_expand(17, 1, _SEVENTEEN_QUINTIC),
        17,
    )
    identity(
        "chain-17-rr-form",
        "sum b_17(5n+1) q^n = f_5^16 (S^3 + 12qS^2 + 14q^2 S + 7q^3), "
        "S = 1/R^5 - 11q - q^2R^5 (mod 17)",
        _rr_form(17, 1, _SEVENTEEN_TRIPLE),
        17,
    )
    identity(
        "t17-3.3",
        "sum b_17(5n+1) q^n = f_1^18/f_5^2 + 12q f_1^12 f_5^4 + 14q^2 f_1^6 f_5^10 "
        "+ 7 sum b_17(n) q^{5n+3} (mod 17)",
        _eta_step(
            _picked(5, 1),
            [(1, 0, _F18), (12, 1, _F12), (14, 2, _F6)],
            [(7, _spread(5, 3))],
        ),
        17,
    )
    identity(
        "chain-17-5^2-a",
        "sum b_17(25n+16) q^n = q^3 f_5^18/f_1^2 + 12 f_1^4 f_5^12 (3 f_1^12/f_5^12 + 3q^2) "
        "+ 14 f_1^10 f_5^6 (11 f_1^6/f_5^6 + 9q) + 7 sum b_17(n) q^n (mod 17)",
        _eta_step(
            _picked(25, 16),
            [
                (1, 3, {"f5": 18, "f1": -2}),
                (36, 0, {"f1": 16}),
                (36, 2, {"f1": 4, "f5": 12}),
                (154, 0, {"f1": 16}),
                (126, 1, {"f1": 10, "f5": 6}),
            ],
            [(7, _whole)],
        ),
        17,
    )
    identity(
        "chain-17-5^2-b",
        "sum b_17(25n+16) q^n = 7q f_1^10 f_5^6 + 2q^2 f_1^4 f_5^12 + q^3 f_5^18/f_1^2 "
        "+ 10 sum b_17(n) q^n (mod 17)",
        _eta_step(
            _picked(25, 16),
            [
                (7, 1, {"f1": 10, "f5": 6}),
                (2, 2, {"f1": 4, "f5": 12}),
                (1, 3, {"f5": 18, "f1": -2}),
            ],
            [(10, _whole)],
        ),
        17,
    )
    identity(
        "chain-17-5^3-a",
        "sum b_17(125n+41) q^n = 7 f_1^6 f_5^10 (f_1^12/f_5^12 + 12q f_1^6/f_5^6 + q^2) "
        "+ 2 f_1^12 f_5^4 (12q) + f_1^6 f_5^10 (10q f_1^6/f_5^6 + 6q^2) "
        "+ 10 sum b_17(5n+1) q^n (mod 17)",
        _eta_step(
            _picked(125, 41),
            [
                (7, 0, _F18),
                (84, 1, _F12),
                (7, 2, _F6),
                (24, 1, _F12),
                (10, 1, _F12),
                (6, 2, _F6),
            ],
            [(10, _picked(5, 1))],
        ),
        17,
    )
    identity(
        "chain-17-5^3-b",
        "sum b_17(125n+41) q^n = 7 f_1^18/f_5^2 + 16q f_1^12 f_5^4 + 13q^2 f_1^6 f_5^10 "
        "+ 10 sum b_17(5n+1) q^n (mod 17)",
        _eta_step(
            _picked(125, 41),
            [(7, 0, _F18), (16, 1, _F12), (13, 2, _F6)],
            [(10, _picked(5, 1))],
        ),
        17,
    )
    identity(
        "t17-3.4",
        "sum b_17(125n+41) q^n = 2 sum b_17(n) q^{5n+3} (mod 17)",
        _eta_step(_picked(125, 41), [], [(2, _spread(5, 3))]),
        17,
    )

    # l = 23
    identity("t23-gf", "sum b_23(n) q^n = f_1^22 (mod 23)", _gf_power(23), 23)
    identity(
        "t23-quintic-expand",
        "sum b_23(5n+2) q^{5n+2} = f_25^22 (2q^2/R(q^5)^20 + 21q^7/R(q^5)^15 + ...) (mod 23)",
        _quintic_expand(23, 2, _TWENTYTHREE_QUINTIC),
        23,
    )
    identity(
        "chain-23-rr-form",
        "sum b_23(5n+2) q^n = f_5^22 (2S^4 + 17qS^3 + 17q^2S^2 + 14q^4), "
        "S = 1/R^5 - 11q - q^2R^5 (mod 23)",
        _rr_form(23, 2, _TWENTYTHREE_QUAD),
        23,
    )
    identity(
        "t23-4.3",
        "sum b_23(5n+2) q^n = 2 f_1^24/f_5^2 + 17q f_1^18 f_5^4 + 17q^2 f_1^12 f_5^10 "
        "+ 14 sum b_23(n) q^{5n+4} (mod 23)",
        _eta_step(
            _picked(5, 2),
            [(2, 0, _F24), (17, 1, _F18_23), (17, 2, _F12_23)],
            [(14, _spread(5, 4))],
        ),
        23,
    )
    identity(
        "chain-23-5^2-a",
        "sum b_23(25n+22) q^n = 2q^4 f_5^24/f_1^2 + 17 f_1^4 f_5^18 (19 f_1^18/f_5^18 + 7q^3) "
        "+ 17 f_1^10 f_5^12 (8 f_1^12/f_5^12 + 3q^2) + 14 sum b_23(n) q^n (mod 23)",
        _eta_step(
            _picked(25, 22),
            [
                (2, 4, _GINV),
                (323, 0, {"f1": 22}),
                (119, 3, _G4),
                (136, 0, {"f1": 22}),
                (51, 2, _G10),
            ],
            [(14, _whole)],
        ),
        23,
    )
    identity(
        "t23-4.4",
        "sum b_23(25n+22) q^n = 5q^2 f_1^10 f_5^12 + 4q^3 f_1^4 f_5^18 + 2q^4 f_5^24/f_1^2 "
        "+ 13 sum b_23(n) q^n (mod 23)",
        _eta_step(_picked(25, 22), [(5, 2, _G10), (4, 3, _G4), (2, 4, _GINV)], [(13, _whole)]),
        23,
    )
    identity(
        "chain-23-5^3-a",
        "sum b_23(125n+72) q^n = 5 f_1^12 f_5^10 (f_1^12/f_5^12 + 20q f_1^6/f_5^6 + 16q^2) "
        "+ 4 f_1^18 f_5^4 (18q) + 2 f_1^12 f_5^10 (10q f_1^6/f_5^6 + 10q^2) "
        "+ 13 sum b_23(5n+2) q^n (mod 23)",
        _eta_step(
            _picked(125, 72),
            [
                (5, 0, _F24),
                (100, 1, _F18_23),
                (80, 2, _F12_23),
                (72, 1, _F18_23),
                (20, 1, _F18_23),
                (20, 2, _F12_23),
            ],
            [(13, _picked(5, 2))],
        ),
        23,
    )
    identity(
        "chain-23-5^3-b",
        "sum b_23(125n+72) q^n = 5 f_1^24/f_5^2 + 8q f_1^18 f_5^4 + 8q^2 f_1^12 f_5^10 "
        "+ 13 sum b_23(5n+2) q^n (mod 23)",
        _eta_step(
            _picked(125, 72),
            [(5, 0, _F24), (8, 1, _F18_23), (8, 2, _F12_23)],
            [(13, _picked(5, 2))],
        ),
        23,
    )
    identity(
        "chain-23-5^3-c",
        "sum b_23(125n+72) q^n = 8 f_1^24/f_5^2 + 22q f_1^18 f_5^4 + 22q^2 f_1^12 f_5^10 "
        "+ 21 sum b_23(n) q^{5n+4} (mod 23)",
        _eta_step(
            _picked(125, 72),
            [(8, 0, _F24), (22, 1, _F18_23), (22, 2, _F12_23)],
            [(21, _spread(5, 4))],
        ),
        23,
    )
    identity(
        "chain-23-5^4-a",
        "sum b_23(625n+572) q^n = 8q^4 f_5^24/f_1^2 + 22 f_1^4 f_5^18 (19 f_1^18/f_5^18 + 7q^3) "
        "+ 22 f_1^10 f_5^12 (8 f_1^12/f_5^12 + 3q^2) + 21 sum b_23(n) q^n (mod 23)",
        _eta_step(
            _picked(625, 572),
            [
                (8, 4, _GINV),
                (418, 0, {"f1": 22}),
                (154, 3, _G4),
                (176, 0, {"f1": 22}),
                (66, 2, _G10),
            ],
            [(21, _whole)],
        ),
        23,
    )
    identity(
        "chain-23-5^4-b",
        "sum b_23(625n+572) q^n = 20q^2 f_1^10 f_5^12 + 16q^3 f_1^4 f_5^18 + 8q^4 f_5^24/f_1^2 "
        "+ 17 sum b_23(n) q^n (mod 23)",
        _eta_step(_picked(625, 572), [(20, 2, _G10), (16, 3, _G4), (8, 4, _GINV)], [(17, _whole)]),
        23,
    )
    identity(
        "chain-23-5^4-c",
        "sum b_23(625n+572) q^n = 4 sum b_23(25n+22) q^n + 11 sum b_23(n) q^n (mod 23)",
        _eta_step(_picked(625, 572), [], [(4, _picked(25, 22)), (11, _whole)]),
        23,
    )
    family("t23-4.5", lemma23_claim(2))
    identity(
        "chain-23-k11-a",
        "18 sum b_23(25n+22) q^n + 20 sum b_23(n) q^n = 21q^2 f_1^10 f_5^12 + 3q^3 f_1^4 f_5^18 "
        "+ 13q^4 f_5^24/f_1^2 + sum b_23(n) q^n (mod 23)",
        _chain_23_k11_a,
        23,
    )
    identity(
        "chain-23-k11-b",
        "U_{5,2}(18 sum b_23(25n+22) q^n + 20 sum b_23(n) q^n) = 21 f_1^12 f_5^10 (f_1^12/f_5^12 "
        "+ 20q f_1^6/f_5^6 + 16q^2) + 3 f_1^18 f_5^4 (18q) + 13 f_1^12 f_5^10 (10q f_1^6/f_5^6 "
        "+ 10q^2) + sum b_23(5n+2) q^n (mod 23)",
        _eta_step(
            _k11_picked,
            [
                (21, 0, _F24),
                (420, 1, _F18_23),
                (336, 2, _F12_23),
                (54, 1, _F18_23),
                (130, 1, _F18_23),
                (130, 2, _F12_23),
            ],
            [(1, _picked(5, 2))],
        ),
        23,
    )
    identity(
        "chain-23-k11-c",
        "U_{5,2}(18 sum b_23(25n+22) q^n + 20 sum b_23(n) q^n) = 21 f_1^24/f_5^2 + 6q f_1^18 f_5^4 "
        "+ 6q^2 f_1^12 f_5^10 + sum b_23(5n+2) q^n (mod 23)",
        _eta_step(
            _k11_picked,
            [(21, 0, _F24), (6, 1, _F18_23), (6, 2, _F12_23)],
            [(1, _picked(5, 2))],
        ),
        23,
    )
    identity(
        "t23-final",
        "21 f_1^24/f_5^2 + 6q f_1^18 f_5^4 + 6q^2 f_1^12 f_5^10 + sum b_23(5n+2) q^n "
        "= 14 sum b_23(n) q^{5n+4} (mod 23)",
        _t23_final,
        23,
    )

    # congruence families
    family("fam-13-k1", theorem13_claim(1))
    derived = progression_chain(3, 2, 13, 4)[-1][0]
    family("fam-13-k1-derived", theorem13_claim(1, multiplier=derived))
    for r in THIRTEEN_ZERO_RESIDUES:
        family(f"fam-13-zero-r{r}", theorem13_zero_claim(r))
    family("fam-17-k1", theorem17_claim(1))
    for r in SEVENTEEN_ZERO_RESIDUES:
        family(f"fam-17-zero-r{r}", theorem17_zero_claim(r))
    family("fam-23-k3", lemma23_claim(3), n_limit=80)
    family("fam-13-k2", theorem13_claim(2), n_limit=5)
    family("fam-13-k2-derived", theorem13_claim(2, multiplier=derived), n_limit=5)

    return {check.name: check for check in checks}


REGISTRY: Dict[str, Check] = _build()


def list_checks(include_stretch: bool = False) -> List[Check]:
    """Registered checks in registration order"""
    return [
        check
        for name, check in REGISTRY.items()
        if include_stretch or name not in STRETCH_CHECKS
    ]


def get_check(name: str) -> Check:
    """
    Look up a check by name

    Raises:
        UnknownCheckError: If no check is registered under ``name``
    """
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownCheckError(name) from None


def run_check(
    name: str,
    order: Optional[int] = None,
    n_max: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> CheckResult:
    """
    Run one registered check

    Args:
        name: Registry name, e.g. "t13-key"
        order: Order of the base generating function (default from settings)
        n_max: Largest n for family checks (default from settings)

    Raises:
        UnknownCheckError: If the name is not registered
        InsufficientOrderError: If the order leaves nothing to compare
        OutOfDeskScaleError: If the check needs more than REGULUS_MAX_ORDER
    """
    settings = settings or get_settings()
    check = get_check(name)
    return check.run(
        settings.default_order if order is None else order,
        settings.default_nmax if n_max is None else n_max,
        settings,
    )
