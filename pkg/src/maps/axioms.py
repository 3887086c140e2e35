"""
Axiom checks for boolean maps

BM1  order-preserving (checked on cover pairs, which suffices by transitivity)
BM2  A(w) = N forces A(w^c) = P
BM3  A(10...0|0...0) = P, A(theta) = N, A(Theta) = P
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List

import numpy as np

from ..lattice import LatticeString, Region, lattice_table, region_mask
from .types import BooleanMap

logger = logging.getLogger(__name__)

MAX_VIOLATIONS = 20


@dataclass
class AxiomReport:
    """Result of checking BM1-BM3 on one map"""
    bm1: bool
    bm2: bool
    bm3: bool
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.bm1 and self.bm2 and self.bm3

    def as_dict(self) -> Dict:
        return {"bm1": self.bm1, "bm2": self.bm2, "bm3": self.bm3, "violations": self.violations}


def check_bm_axioms(A: BooleanMap, max_violations: int = MAX_VIOLATIONS) -> AxiomReport:
    shape = A.shape
    table = lattice_table(shape)
    values = A.values
    violations: List[str] = []

    # BM1
    bad_edges = np.flatnonzero(values[table.edge_src] & ~values[table.edge_dst])
    for e in bad_edges[:max_violations]:
        lower = table.element(int(table.edge_src[e]))
        upper = table.element(int(table.edge_dst[e]))
        violations.append(f"BM1: {lower} is P but its cover {upper} is N")

    # BM2; each bad pair is reported once
    index = np.arange(len(table))
    bad_pairs = np.flatnonzero(~values & ~values[table.complements] & (index <= table.complements))
    for i in bad_pairs[:max_violations]:
        w = table.element(int(i))
        w_c = table.element(int(table.complements[i]))
        violations.append(f"BM2: {w} and its complement {w_c} are both N")

    # BM3
    anchors = [
        (LatticeString(shape, 1, 0), True),
        (LatticeString(shape, 0, 0), False),
        (LatticeString(shape, shape.pos_full, shape.neg_full), True),
    ]
    bm3 = True
    for w, expected in anchors:
        if A.is_positive(w) != expected:
            bm3 = False
            violations.append(f"BM3: {w} must be {'P' if expected else 'N'}")

    report = AxiomReport(bm1=bad_edges.size == 0, bm2=bad_pairs.size == 0, bm3=bm3, violations=violations)
    if not report.passed:
        logger.debug(f"Axiom check failed on {shape}: {violations[:3]}")
    return report


def check_forced_regions(A: BooleanMap, max_violations: int = MAX_VIOLATIONS) -> List[str]:
    """
    Every map in W+(n,r) is P on S1_PLUS and S2_PLUS and N on S1_MINUS and S2_MINUS.

    Returns the elements breaking this, empty when the map conforms.
    """
    shape = A.shape.require_negatives()
    table = lattice_table(shape)
    plus = region_mask(shape, Region.S1_PLUS, Region.S2_PLUS)
    minus = region_mask(shape, Region.S1_MINUS, Region.S2_MINUS)

    violations = [f"{w} lies in a PLUS region but is N" for w in table.strings(plus & ~A.values)]
    violations += [f"{w} lies in a MINUS region but is P" for w in table.strings(minus & A.values)]
    return violations[:max_violations]
