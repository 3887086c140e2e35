"""
Basis conditions B1-B3 and the basis-to-map construction

For a basis <Y+ | Y->:
  B1  down(Y+) and Y-^c are disjoint
  B2  (up(Y+) | up(Y-^c)) and down(Y-) are disjoint
  B3  up(Y+) | up(Y-^c) | down(Y-) covers the whole lattice
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from ..errors import InvalidBasisError
from ..lattice import LatticeTable, lattice_table
from .types import Basis, BooleanMap

logger = logging.getLogger(__name__)

MAX_VIOLATIONS = 20


@dataclass
class BasisReport:
    b1: bool
    b2: bool
    b3: bool
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.b1 and self.b2 and self.b3

    def as_dict(self) -> Dict:
        return {"b1": self.b1, "b2": self.b2, "b3": self.b3, "violations": self.violations}


@dataclass
class _BasisMasks:
    up_plus: np.ndarray
    down_plus: np.ndarray
    minus_complements: np.ndarray
    up_minus_complements: np.ndarray
    down_minus: np.ndarray

    @property
    def positive(self) -> np.ndarray:
        return self.up_plus | self.up_minus_complements


def _masks(table: LatticeTable, b: Basis) -> _BasisMasks:
    plus = table.mask_of(b.y_plus)
    minus = table.mask_of(b.y_minus)
    minus_c = np.zeros(len(table), dtype=bool)
    minus_c[table.complements[minus]] = True
    return _BasisMasks(
        up_plus=table.upset_mask(plus),
        down_plus=table.downset_mask(plus),
        minus_complements=minus_c,
        up_minus_complements=table.upset_mask(minus_c),
        down_minus=table.downset_mask(minus),
    )


def check_basis(b: Basis, max_violations: int = MAX_VIOLATIONS) -> BasisReport:
    table = lattice_table(b.shape)
    masks = _masks(table, b)
    violations: List[str] = []

    b1_bad = masks.down_plus & masks.minus_complements
    b2_bad = masks.positive & masks.down_minus
    b3_bad = ~(masks.positive | masks.down_minus)

    for label, bad, message in (
        ("B1", b1_bad, "is below Y+ and in Y-^c"),
        ("B2", b2_bad, "is both above the positive generators and below Y-"),
        ("B3", b3_bad, "is covered by no part of the basis"),
    ):
        for w in table.strings(bad)[:max_violations]:
            violations.append(f"{label}: {w} {message}")

    return BasisReport(
        b1=not b1_bad.any(),
        b2=not b2_bad.any(),
        b3=not b3_bad.any(),
        violations=violations,
    )


def map_from_basis(b: Basis) -> BooleanMap:
    """
    Map that is P on up(Y+) | up(Y-^c) and N elsewhere.

    Raises InvalidBasisError unless the basis satisfies B1-B3.
    """
    report = check_basis(b)
    if not report.passed:
        raise InvalidBasisError(f"Basis fails {report.violations[:3]}")
    table = lattice_table(b.shape)
    return BooleanMap(shape=b.shape, values=_masks(table, b).positive)
