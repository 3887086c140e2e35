"""
Stage: extremal weight functions and the bound chain gamma* <= gamma <= eta <= eta*
"""
import logging

from ...census import RealMultiset, count_nonneg_subsets_mitm
from ...lattice import Shape
from ...maps import check_bm_axioms
from ...synthesis import synthesize_map
from ...weights import WeightFunction, alpha, maximizer, minimizer
from ..types import ExtremesReport

logger = logging.getLogger(__name__)


def _census_count(wf: WeightFunction) -> int:
    return count_nonneg_subsets_mitm(RealMultiset.of(wf.values))


def _is_witness(shape: Shape, q: int) -> bool:
    A = synthesize_map(shape, q)
    return A.positive_count == q and check_bm_axioms(A).passed


class ExtremesStage:
    """
    Builds both extremal weight functions and counts their non-negative
    sums through the lattice and the census.
    """

    def execute(self, shape: Shape) -> ExtremesReport:
        shape.require_negatives()
        low, high = minimizer(shape), maximizer(shape)
        report = ExtremesReport(
            shape=shape,
            minimizer=low,
            maximizer=high,
            alpha_min=alpha(low),
            alpha_max=alpha(high),
            census_min=_census_count(low),
            census_max=_census_count(high),
            gamma_star_witness=_is_witness(shape, shape.gamma),
            eta_star_witness=_is_witness(shape, shape.eta),
        )
        if not report.passed:
            logger.warning(f"Extremal counts disagree with the closed forms on {shape}")
        return report
