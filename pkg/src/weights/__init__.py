# (n,r)-weight functions and their induced boolean maps
from .types import WeightFunction
from .functions import validate, is_valid, sigma, sum_table, induced_map, alpha
from .extremes import minimizer, maximizer, interpolate, sample_random
from .search import SearchResult, search_realizing

__all__ = [
    "WeightFunction",
    "validate",
    "is_valid",
    "sigma",
    "sum_table",
    "induced_map",
    "alpha",
    "minimizer",
    "maximizer",
    "interpolate",
    "sample_random",
    "SearchResult",
    "search_realizing",
]
