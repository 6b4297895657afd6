"""Data models for series, claims and verification results"""

from .ring import RingKind, CoefficientRing
from .dissection import DissectionSpec
from .claim import ProgressionTerm, CongruenceClaim
from .result import CheckStatus, Mismatch, CheckParams, CheckResult, Report
from .sequence import SequencePair

__all__ = [
    "RingKind",
    "CoefficientRing",
    "DissectionSpec",
    "ProgressionTerm",
    "CongruenceClaim",
    "CheckStatus",
    "Mismatch",
    "CheckParams",
    "CheckResult",
    "Report",
    "SequencePair",
]
