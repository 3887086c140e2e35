"""
End-to-end verification of one synthesized map
"""
import logging
from typing import List

import numpy as np

from ..lattice import LatticeTable, PropertyCheck, Region, Shape, lattice_table, region_mask
from ..maps import check_basis, check_bm_axioms, check_forced_regions, map_from_basis
from .construction import synthesize
from .types import BasisCase, SynthesisReport, SynthesisResult

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10


def _mask_check(table: LatticeTable, name: str, offending: np.ndarray) -> PropertyCheck:
    bad = table.strings(offending)[:MAX_COUNTEREXAMPLES]
    return PropertyCheck(name=name, passed=not offending.any(), counterexamples=[str(w) for w in bad])


def _basis_checks(result: SynthesisResult) -> List[PropertyCheck]:
    d, basis = result.decomposition, result.basis
    shape = result.shape
    table = lattice_table(shape)
    checks: List[PropertyCheck] = []

    basis_report = check_basis(basis)
    for name, passed in (("b1", basis_report.b1), ("b2", basis_report.b2), ("b3", basis_report.b3)):
        detail = [v for v in basis_report.violations if v.startswith(name.upper())]
        checks.append(PropertyCheck(name=name, passed=passed, counterexamples=detail))

    plus = table.mask_of(basis.y_plus)
    minus = table.mask_of(basis.y_minus)
    minus_c = np.zeros(len(table), dtype=bool)
    minus_c[table.complements[minus]] = True

    generated = table.upset_mask(plus) | table.upset_mask(minus_c)
    expected_up = region_mask(shape, Region.S2_PM, Region.S1_PLUS, Region.S2_PLUS)
    expected_up |= table.mask_of(d.upper_levels + d.v_chosen)
    checks.append(_mask_check(table, "upsets_of_basis_equal_positive_part", generated != expected_up))

    below = table.downset_mask(minus)
    expected_down = region_mask(shape, Region.S1_MINUS, Region.S2_MINUS)
    expected_down |= table.mask_of(d.lower_levels + d.v_rest)
    checks.append(_mask_check(table, "downset_of_basis_equals_negative_part", below != expected_down))

    if basis_report.passed:
        rebuilt = map_from_basis(basis)
        checks.append(_mask_check(table, "basis_map_equals_synthesized_map",
                                  rebuilt.values != result.map.values))
    else:
        checks.append(PropertyCheck(name="basis_map_equals_synthesized_map", passed=False,
                                    counterexamples=["basis fails B1-B3"]))
    return checks


def verify_synthesis(shape: Shape, q: int) -> SynthesisReport:
    """
    Check the count, BM1-BM3 and the forced regions of the synthesized map;
    when it comes from a basis also B1-B3, both generating-set identities
    and that the basis rebuilds the same map.
    """
    result = synthesize(shape, q)
    A = result.map

    count = A.positive_count
    checks = [
        PropertyCheck(name="count", passed=count == q,
                      counterexamples=[] if count == q else [f"positive count {count} != {q}"]),
    ]
    axioms = check_bm_axioms(A)
    for name, passed in (("bm1", axioms.bm1), ("bm2", axioms.bm2), ("bm3", axioms.bm3)):
        detail = [v for v in axioms.violations if v.startswith(name.upper())]
        checks.append(PropertyCheck(name=name, passed=passed, counterexamples=detail))

    forced = check_forced_regions(A)
    checks.append(PropertyCheck(name="forced_regions", passed=not forced, counterexamples=forced))

    if result.case is not BasisCase.EXTREMAL:
        checks.extend(_basis_checks(result))

    report = SynthesisReport(shape=shape, q=q, case=result.case, checks=checks)
    if not report.passed:
        logger.warning(f"Synthesis of q={q} on {shape} failed: {report.failed}")
    return report
