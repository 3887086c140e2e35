"""
Boolean maps in W+(n,r) with a prescribed number of positive elements

For gamma <= q <= eta, write q = 2^(n-1) + p. The extremal counts (and
every count when r = 1) come from the induced maps of the extremal weight
functions. Otherwise the map is P on S2_PM, S1_PLUS, S2_PLUS, the top k+1
levels of S1_PM and the first s elements of level k+1, and N elsewhere.
"""
import logging
from typing import Optional

from ..lattice import Region, Shape, SpecialElement, lattice_table, region_mask, region_size, special
from ..maps import Basis, BooleanMap
from ..weights import induced_map, maximizer, minimizer
from .levels import check_count_range, decompose
from .types import BasisCase, LevelDecomposition, SynthesisResult

logger = logging.getLogger(__name__)

ALWAYS_POSITIVE = (Region.S2_PM, Region.S1_PLUS, Region.S2_PLUS)


def _extremal_map(shape: Shape, q: int) -> Optional[BooleanMap]:
    p = check_count_range(shape, q)
    if shape.r == 1 or p == 0:
        return induced_map(minimizer(shape))
    if p == region_size(shape, Region.S1_PM):
        return induced_map(maximizer(shape))
    return None


def map_from_decomposition(d: LevelDecomposition) -> BooleanMap:
    table = lattice_table(d.shape)
    values = region_mask(d.shape, *ALWAYS_POSITIVE)
    values |= table.mask_of(d.upper_levels + d.v_chosen)
    return BooleanMap(shape=d.shape, values=values)


def synthesize_map(shape: Shape, q: int) -> BooleanMap:
    extremal = _extremal_map(shape, q)
    if extremal is not None:
        return extremal
    return map_from_decomposition(decompose(shape, q))


def classify_basis_case(d: LevelDecomposition) -> BasisCase:
    """a1 when alpha lies above T+, a2 otherwise"""
    table = lattice_table(d.shape)
    alpha = special(d.shape, SpecialElement.ALPHA)
    above = table.upset_mask(table.mask_of(d.t_plus))
    return BasisCase.A1 if above[table.index_of(alpha)] else BasisCase.A2


def basis_from_decomposition(d: LevelDecomposition) -> Basis:
    y_plus = list(d.t_plus)
    if classify_basis_case(d) is BasisCase.A2:
        y_plus.append(special(d.shape, SpecialElement.ALPHA))
    y_minus = list(d.t_minus) + [special(d.shape, SpecialElement.THETA)]
    return Basis(shape=d.shape, y_plus=frozenset(y_plus), y_minus=frozenset(y_minus))


def synthesize_basis(shape: Shape, q: int) -> Basis:
    """
    Basis generating the synthesized map.

    Raises BoundaryCaseError for the extremal counts, which are not built from a basis.
    """
    return basis_from_decomposition(decompose(shape, q))


def synthesize(shape: Shape, q: int) -> SynthesisResult:
    """Map, and where one exists the decomposition, case and basis, for a count q"""
    extremal = _extremal_map(shape, q)
    if extremal is not None:
        logger.debug(f"q={q} on {shape} uses an extremal weight function")
        return SynthesisResult(shape=shape, q=q, map=extremal, case=BasisCase.EXTREMAL)

    d = decompose(shape, q)
    case = classify_basis_case(d)
    logger.debug(f"q={q} on {shape}: p={d.p}, k={d.k}, s={d.s}, case {case.value}")
    return SynthesisResult(
        shape=shape,
        q=q,
        map=map_from_decomposition(d),
        case=case,
        decomposition=d,
        basis=basis_from_decomposition(d),
    )
