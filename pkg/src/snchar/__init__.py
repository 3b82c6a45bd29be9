"""Exact symmetric-group character tools.

Evaluate irreducible characters of S_n exactly via border-strip tilings,
identify an unknown character from oracle answers alone, and construct a
cycle type on which two given characters provably differ.
"""

from .distinguish import Separator, distinguish
from .identify import IdentifyResult, identify
from .mn_eval import ENGINE, chi, enumerate_bsts
from .oracle import counting_oracle, exact_oracle
from .partitions import parse_composition, parse_partition

__all__ = [
    "ENGINE",
    "IdentifyResult",
    "Separator",
    "chi",
    "counting_oracle",
    "distinguish",
    "enumerate_bsts",
    "exact_oracle",
    "identify",
    "parse_composition",
    "parse_partition",
]
