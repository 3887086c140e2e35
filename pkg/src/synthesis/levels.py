"""
Rank levels of S1_PM and the greedy decomposition of a target count
"""
import logging
from itertools import accumulate
from typing import Dict

import networkx as nx
import numpy as np

from ..errors import BoundaryCaseError, OutOfRangeError, ShapeError
from ..lattice import Region, Shape, lattice_table, region_mask, region_size
from .types import LevelDecomposition, RankLevels

logger = logging.getLogger(__name__)


def rank_levels(shape: Shape) -> RankLevels:
    """
    Heights inside the induced subposet S1_PM, as longest chains from its
    bottom b1 along cover edges; levels are listed from the top t1 down.
    """
    if not 1 < shape.r < shape.n:
        raise ShapeError(f"Rank levels need 1 < r < n, got shape {shape}")
    table = lattice_table(shape)
    inside = region_mask(shape, Region.S1_PM)

    graph = nx.DiGraph()
    graph.add_nodes_from(int(i) for i in np.flatnonzero(inside))
    keep = inside[table.edge_src] & inside[table.edge_dst]
    graph.add_edges_from(zip(table.edge_src[keep].tolist(), table.edge_dst[keep].tolist()))

    height: Dict[int, int] = {}
    for node in nx.topological_sort(graph):
        below = [height[u] for u in graph.predecessors(node)]
        height[node] = max(below) + 1 if below else 0

    R = max(height.values())
    levels = [
        [table.element(i) for i in sorted(v for v, h in height.items() if h == R - level)]
        for level in range(R + 1)
    ]
    logger.debug(f"Rank levels of {shape}: R={R}, betas={[len(x) for x in levels]}")
    return RankLevels(shape=shape, R=R, levels=levels)


def check_count_range(shape: Shape, q: int) -> int:
    """Return p = q - 2^(n-1) after checking gamma <= q <= eta"""
    shape.require_negatives()
    if not shape.gamma <= q <= shape.eta:
        raise OutOfRangeError(
            f"q = {q} lies outside the valid interval [{shape.gamma}, {shape.eta}] "
            f"for shape {shape}"
        )
    return q - shape.gamma


def decompose(shape: Shape, q: int) -> LevelDecomposition:
    p = check_count_range(shape, q)
    if shape.r == 1 or p == 0 or p == region_size(shape, Region.S1_PM):
        raise BoundaryCaseError(
            f"q = {q} on {shape} is served by an extremal weight function, not a decomposition"
        )

    levels = rank_levels(shape)
    prefix = list(accumulate(levels.betas))
    k = max(i for i, total in enumerate(prefix) if total <= p)
    s = p - prefix[k]

    table = lattice_table(shape)
    next_level = levels.level(k + 1)
    v_chosen, v_rest = next_level[:s], next_level[s:]

    above_chosen = table.upset_mask(table.mask_of(v_chosen))
    t_above = [w for w in levels.level(k) if above_chosen[table.index_of(w)]]
    t_rest = [w for w in levels.level(k) if not above_chosen[table.index_of(w)]]

    below_rest = table.downset_mask(table.mask_of(v_rest))
    z_below = [w for w in levels.level(k + 2) if below_rest[table.index_of(w)]]
    z_rest = [w for w in levels.level(k + 2) if not below_rest[table.index_of(w)]]

    return LevelDecomposition(
        shape=shape,
        rank_levels=levels,
        p=p,
        k=k,
        s=s,
        v_chosen=v_chosen,
        v_rest=v_rest,
        t_above=t_above,
        t_rest=t_rest,
        z_below=z_below,
        z_rest=z_rest,
    )
