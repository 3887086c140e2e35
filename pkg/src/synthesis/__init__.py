# Boolean maps with a prescribed number of positive elements
from .types import BasisCase, RankLevels, LevelDecomposition, SynthesisResult, SynthesisReport
from .levels import rank_levels, decompose
from .construction import (
    synthesize_map,
    synthesize_basis,
    classify_basis_case,
    map_from_decomposition,
    basis_from_decomposition,
    synthesize,
)
from .verify import verify_synthesis

__all__ = [
    "BasisCase",
    "RankLevels",
    "LevelDecomposition",
    "SynthesisResult",
    "SynthesisReport",
    "rank_levels",
    "decompose",
    "synthesize_map",
    "synthesize_basis",
    "classify_basis_case",
    "map_from_decomposition",
    "basis_from_decomposition",
    "synthesize",
    "verify_synthesis",
]
