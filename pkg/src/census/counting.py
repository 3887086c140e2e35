"""
Counting nonempty subsets with non-negative sum

The empty subset is never counted. All comparisons are exact: values are
scaled to integers over their common denominator first.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..config import get_settings
from ..errors import OutOfRangeError
from ..rationals import scale_to_integers
from .types import RealMultiset, Signature

logger = logging.getLogger(__name__)

_INT64_SAFE = 1 << 62


def _dtype_for(ints: Sequence[int]):
    return np.int64 if sum(abs(v) for v in ints) < _INT64_SAFE else object


def _subset_sums(ints: Sequence[int], dtype) -> np.ndarray:
    """All 2^k subset sums by doubling"""
    sums = np.zeros(1, dtype=dtype)
    for v in ints:
        sums = np.concatenate([sums, sums + v])
    return sums


def _check_bound(m: RealMultiset, limit: Optional[int], default: int, label: str) -> None:
    limit = default if limit is None else limit
    if m.n > limit:
        raise OutOfRangeError(f"{label} census supports at most {limit} values, got {m.n}")


def count_nonneg_subsets_naive(m: RealMultiset, n_max: Optional[int] = None) -> int:
    _check_bound(m, n_max, get_settings().lattice.census_n_max, "Naive")
    ints, _ = scale_to_integers(m.values)
    sums = _subset_sums(ints, _dtype_for(ints))
    return int(np.count_nonzero(sums >= 0)) - 1


def count_nonneg_subsets_mitm(m: RealMultiset, n_max: Optional[int] = None) -> int:
    """
    Meet-in-the-middle count: each half enumerates its 2^(n/2) sums, one
    side is sorted, and every left sum a is paired with the right sums >= -a.
    """
    _check_bound(m, n_max, get_settings().lattice.mitm_n_max, "Meet-in-the-middle")
    ints, _ = scale_to_integers(m.canonical())
    dtype = _dtype_for(ints)
    half = len(ints) // 2
    left = _subset_sums(ints[:half], dtype)
    right = np.sort(_subset_sums(ints[half:], dtype))
    below = np.searchsorted(right, -left, side="left")
    pairs = int(len(right) * len(left) - int(np.sum(below)))
    return pairs - 1


def classify_signature(m: RealMultiset) -> Signature:
    return Signature(n=m.n, r=m.r, in_w=m.total >= 0)


@dataclass
class CensusReport:
    values: str
    signature: Signature
    naive: Optional[int]
    mitm: int
    gamma: Optional[int]
    eta: Optional[int]

    @property
    def agree(self) -> bool:
        return self.naive is None or self.naive == self.mitm

    @property
    def position(self) -> Optional[str]:
        """Where the count sits in [gamma, eta]; None when the range does not apply"""
        if self.gamma is None or self.eta is None:
            return None
        if self.mitm == self.gamma:
            return "minimum"
        if self.mitm == self.eta:
            return "maximum"
        if self.gamma < self.mitm < self.eta:
            return "interior"
        return "outside"

    def as_dict(self) -> Dict:
        return {
            "values": self.values,
            **self.signature.as_dict(),
            "naive": self.naive,
            "mitm": self.mitm,
            "agree": self.agree,
            "range": None if self.gamma is None else [self.gamma, self.eta],
            "position": self.position,
        }

    def lines(self) -> List[str]:
        lines = [
            f"values: {self.values}",
            f"n = {self.signature.n}, r = {self.signature.r}, in_W = {self.signature.in_w}",
            f"naive count: {'skipped' if self.naive is None else self.naive}",
            f"mitm count: {self.mitm}",
        ]
        if self.position is not None:
            lines.append(f"range: [{self.gamma}, {self.eta}], position = {self.position}")
        return lines


def census(m: RealMultiset) -> CensusReport:
    """Both counts plus the signature; the naive path is skipped above its bound"""
    signature = classify_signature(m)
    naive = None
    if m.n <= get_settings().lattice.census_n_max:
        naive = count_nonneg_subsets_naive(m)
    mitm = count_nonneg_subsets_mitm(m)

    gamma = eta = None
    if signature.in_w and 0 < signature.r < signature.n:
        gamma = 1 << (m.n - 1)
        eta = (1 << m.n) - (1 << (m.n - signature.r))

    report = CensusReport(str(m), signature, naive, mitm, gamma, eta)
    if not report.agree:
        logger.warning(f"Census paths disagree on {m}: naive {naive}, mitm {mitm}")
    return report
