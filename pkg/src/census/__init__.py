# Subset-sum census over raw real inputs
from .types import RealMultiset, Signature
from .counting import (
    CensusReport,
    census,
    classify_signature,
    count_nonneg_subsets_mitm,
    count_nonneg_subsets_naive,
)

__all__ = [
    "RealMultiset",
    "Signature",
    "CensusReport",
    "census",
    "classify_signature",
    "count_nonneg_subsets_mitm",
    "count_nonneg_subsets_naive",
]
