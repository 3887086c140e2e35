"""
The six-region atlas of S(n,r) and the sublattice properties behind it

S1 collects the strings containing the deepest bar symbol (n-r), S2 the rest.
Each half splits by its positive side: full (PLUS), empty (MINUS) or
anything in between (PM).
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List

import numpy as np

from .types import LatticeString, Shape
from .universe import LatticeTable, lattice_table

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10


class Region(str, Enum):
    """Regions of the atlas; declaration order is the code stored in region tables"""
    S1_PLUS = "S1_PLUS"
    S1_PM = "S1_PM"
    S1_MINUS = "S1_MINUS"
    S2_PLUS = "S2_PLUS"
    S2_PM = "S2_PM"
    S2_MINUS = "S2_MINUS"

    @property
    def code(self) -> int:
        return list(Region).index(self)

    @property
    def in_s1(self) -> bool:
        return self.value.startswith("S1")


class SpecialElement(str, Enum):
    THETA = "theta"
    BIG_THETA = "Theta"
    ALPHA = "alpha"
    B1 = "b1"
    T1 = "t1"


def classify(w: LatticeString) -> Region:
    shape = w.shape.require_negatives()
    in_s1 = bool(w.neg >> (shape.m - 1) & 1)
    if w.pos == shape.pos_full:
        return Region.S1_PLUS if in_s1 else Region.S2_PLUS
    if w.pos == 0:
        return Region.S1_MINUS if in_s1 else Region.S2_MINUS
    return Region.S1_PM if in_s1 else Region.S2_PM


def special(shape: Shape, name: SpecialElement) -> LatticeString:
    """
    Named elements: theta (all padding), Theta (every index), alpha (minimum of S2_PM),
    b1 (bottom of S1_PM) and t1 (top of S1_PM).
    """
    shape.require_negatives()
    name = SpecialElement(name)
    m = shape.m
    deepest = 1 << (m - 1)
    if name is SpecialElement.THETA:
        return LatticeString(shape, 0, 0)
    if name is SpecialElement.BIG_THETA:
        return LatticeString(shape, shape.pos_full, shape.neg_full)
    if name is SpecialElement.ALPHA:
        return LatticeString(shape, 1, shape.neg_full ^ deepest)
    if name is SpecialElement.B1:
        return LatticeString(shape, 1, shape.neg_full)
    return LatticeString(shape, shape.pos_full ^ 1, deepest)


def region_size(shape: Shape, region: Region) -> int:
    shape.require_negatives()
    half = 1 << (shape.m - 1)
    if Region(region) in (Region.S1_PM, Region.S2_PM):
        return ((1 << shape.r) - 2) * half
    return half


@lru_cache(maxsize=64)
def _region_codes(shape: Shape) -> np.ndarray:
    table = lattice_table(shape)
    in_s1 = (table.neg_masks >> (shape.m - 1)) & 1 == 1
    full = table.pos_masks == shape.pos_full
    empty = table.pos_masks == 0

    codes = np.where(full, Region.S2_PLUS.code, np.where(empty, Region.S2_MINUS.code, Region.S2_PM.code))
    codes = np.where(in_s1, codes - 3, codes)
    codes.flags.writeable = False
    return codes


def region_codes(shape: Shape) -> np.ndarray:
    """Region code of every element in canonical order"""
    shape.require_negatives()
    shape.require_enumerable()
    return _region_codes(shape)


def region_mask(shape: Shape, *regions: Region) -> np.ndarray:
    codes = region_codes(shape)
    return np.isin(codes, [Region(r).code for r in regions])


@dataclass
class PropertyCheck:
    """Outcome of one exhaustive property check"""
    name: str
    passed: bool
    counterexamples: List[str] = field(default_factory=list)


@dataclass
class LemmaReport:
    shape: Shape
    checks: List[PropertyCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> Dict:
        return {
            "n": self.shape.n,
            "r": self.shape.r,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "counterexamples": c.counterexamples}
                for c in self.checks
            ],
        }


def _check(table: LatticeTable, name: str, offending: np.ndarray) -> PropertyCheck:
    bad = table.strings(offending)[:MAX_COUNTEREXAMPLES]
    return PropertyCheck(name=name, passed=not offending.any(), counterexamples=[str(w) for w in bad])


def check_lemma_properties(shape: Shape) -> LemmaReport:
    """
    Exhaustively verify the five sublattice properties:
    up-set of Theta, down-set of theta, closure of S2_PM upward,
    closure of S1_PM downward, and complement of S1_PM.
    """
    shape.require_negatives()
    table = lattice_table(shape)

    def single(w: LatticeString) -> np.ndarray:
        return table.mask_of([w])

    theta = special(shape, SpecialElement.THETA)
    big_theta = special(shape, SpecialElement.BIG_THETA)
    s1_pm = region_mask(shape, Region.S1_PM)
    s2_pm = region_mask(shape, Region.S2_PM)

    up_theta = table.upset_mask(single(big_theta))
    down_theta = table.downset_mask(single(theta))
    up_s2 = table.upset_mask(s2_pm)
    down_s1 = table.downset_mask(s1_pm)
    complement_s1 = np.zeros(len(table), dtype=bool)
    complement_s1[table.complements[s1_pm]] = True

    checks = [
        _check(table, "upset_Theta_is_plus_regions",
               up_theta != region_mask(shape, Region.S1_PLUS, Region.S2_PLUS)),
        _check(table, "downset_theta_is_minus_regions",
               down_theta != region_mask(shape, Region.S1_MINUS, Region.S2_MINUS)),
        _check(table, "upset_S2_PM_within_S2_PM_S2_PLUS",
               up_s2 & ~region_mask(shape, Region.S2_PM, Region.S2_PLUS)),
        _check(table, "downset_S1_PM_within_S1_PM_S1_MINUS",
               down_s1 & ~region_mask(shape, Region.S1_PM, Region.S1_MINUS)),
        _check(table, "complement_S1_PM_is_S2_PM", complement_s1 != s2_pm),
    ]

    report = LemmaReport(shape=shape, checks=checks)
    if not report.passed:
        logger.warning(f"Sublattice properties failed for {shape}: "
                       f"{[c.name for c in checks if not c.passed]}")
    return report
