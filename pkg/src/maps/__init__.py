# Boolean maps S(n,r) -> 2, the W+ axioms and bases
from .types import Truth, BooleanMap, Basis, positive_count
from .axioms import AxiomReport, check_bm_axioms, check_forced_regions
from .basis import BasisReport, check_basis, map_from_basis

__all__ = [
    "Truth",
    "BooleanMap",
    "Basis",
    "positive_count",
    "AxiomReport",
    "check_bm_axioms",
    "check_forced_regions",
    "BasisReport",
    "check_basis",
    "map_from_basis",
]
