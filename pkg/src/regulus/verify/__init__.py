"""Named checks of series identities and congruence families"""

from .base import Check
from .chain import progression_chain
from .checks import EvalContext, FamilyCheck, SeriesIdentityCheck, compare_family, verify_family
from .claims import (
    lemma23_claim,
    theorem13_claim,
    theorem13_zero_claim,
    theorem17_claim,
    theorem17_zero_claim,
)
from .registry import (
    REGISTRY,
    STRETCH_CHECKS,
    get_check,
    list_checks,
    run_check,
    thirteen_key_sides,
)
from .suite import run_suite, select_checks
from .workspace import SeriesWorkspace

__all__ = [
    "Check",
    "progression_chain",
    "EvalContext",
    "FamilyCheck",
    "SeriesIdentityCheck",
    "compare_family",
    "verify_family",
    "lemma23_claim",
    "theorem13_claim",
    "theorem13_zero_claim",
    "theorem17_claim",
    "theorem17_zero_claim",
    "REGISTRY",
    "STRETCH_CHECKS",
    "get_check",
    "list_checks",
    "run_check",
    "thirteen_key_sides",
    "run_suite",
    "select_checks",
    "SeriesWorkspace",
]
