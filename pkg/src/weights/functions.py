"""
Validation, sum function and induced boolean map of a weight function
"""
import logging
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from ..errors import ShapeMismatchError
from ..lattice import LatticeString, lattice_table
from ..maps import BooleanMap
from ..rationals import format_rational, scale_to_integers
from .types import WeightFunction

logger = logging.getLogger(__name__)

# Integer subset sums stay exact in int64 below this magnitude
_INT64_SAFE = 1 << 62


def validate(wf: WeightFunction) -> List[str]:
    """
    Check monotonicity f(r~) >= ... >= f(1~) >= 0 > f(1-) >= ... >= f((n-r)-)
    and total non-negativity. Returns the violations, empty when valid.
    """
    violations: List[str] = []
    pos, neg = wf.pos_values, wf.neg_values

    for i, v in enumerate(pos, start=1):
        if v < 0:
            violations.append(f"monotonicity: f({i}~) = {format_rational(v)} is negative")
    for i in range(1, len(pos)):
        if pos[i] < pos[i - 1]:
            violations.append(
                f"monotonicity: f({i + 1}~) = {format_rational(pos[i])} < "
                f"f({i}~) = {format_rational(pos[i - 1])}"
            )
    for j, v in enumerate(neg, start=1):
        if v >= 0:
            violations.append(f"monotonicity: f({j}-) = {format_rational(v)} is not negative")
    for j in range(1, len(neg)):
        if neg[j] > neg[j - 1]:
            violations.append(
                f"monotonicity: f({j + 1}-) = {format_rational(neg[j])} > "
                f"f({j}-) = {format_rational(neg[j - 1])}"
            )

    total = wf.total
    if total < 0:
        violations.append(f"non-negativity: total sum {format_rational(total)} < 0")
    return violations


def is_valid(wf: WeightFunction) -> bool:
    return not validate(wf)


def sigma(wf: WeightFunction, w: LatticeString) -> Fraction:
    """Sum of the values of the indices present in w"""
    if w.shape != wf.shape:
        raise ShapeMismatchError(f"{w} belongs to {w.shape}, weight function is on {wf.shape}")
    total = Fraction(0)
    for i in w.pos_set:
        total += wf.pos_values[i - 1]
    for j in w.neg_set:
        total += wf.neg_values[j - 1]
    return total


def _side_sums(values: Sequence[int], dtype) -> np.ndarray:
    """sums[mask] = sum of values[b] over the bits b of mask"""
    sums = np.zeros(1 << len(values), dtype=dtype)
    index = np.arange(1 << len(values))
    for b, v in enumerate(values):
        sums = sums + ((index >> b) & 1).astype(dtype) * v
    return sums


def sum_table(wf: WeightFunction) -> np.ndarray:
    """
    Sigma of every element in canonical order, scaled by the common denominator.

    Signs are exact; int64 is used when the magnitudes allow it, Python ints otherwise.
    """
    table = lattice_table(wf.shape)
    ints, _ = scale_to_integers(list(wf.pos_values) + list(wf.neg_values))
    dtype = np.int64 if sum(abs(v) for v in ints) < _INT64_SAFE else object
    r = wf.shape.r
    pos_sums = _side_sums(ints[:r], dtype)
    neg_sums = _side_sums(ints[r:], dtype)
    return pos_sums[table.pos_masks] + neg_sums[table.neg_masks]


def induced_map(wf: WeightFunction) -> BooleanMap:
    """A_f: P where the sum is non-negative, except at the all-padding string"""
    table = lattice_table(wf.shape)
    values = np.asarray(sum_table(wf) >= 0, dtype=bool)
    values[table.index_of(LatticeString(wf.shape, 0, 0))] = False
    return BooleanMap(shape=wf.shape, values=values)


def alpha(wf: WeightFunction) -> int:
    """Number of nonempty index subsets with non-negative sum"""
    count = induced_map(wf).positive_count
    logger.debug(f"alpha{wf} on {wf.shape} = {count}")
    return count
