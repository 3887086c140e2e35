"""
Stage: sublattice properties of the region atlas
"""
from ...lattice import LemmaReport, Shape, check_lemma_properties


class LemmaStage:
    """Exhaustive check of the five region properties"""

    def execute(self, shape: Shape) -> LemmaReport:
        return check_lemma_properties(shape)
