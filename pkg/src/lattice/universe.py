"""
Whole-lattice tables, enumeration, up-sets, down-sets and antichains

Element i of the canonical order has positive mask pos_full - (i >> m) and
negative mask neg_full - (i & neg_full): descending by positive-side bits,
then descending by negative-side bits.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, List, Optional, Set

import numpy as np

from ..errors import ShapeMismatchError
from .order import leq
from .types import LatticeString, Shape

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class LatticeTable:
    """
    Dense per-element data for one shape, indexed by canonical position.

    Cover edges (edge_src covered by edge_dst) are sorted by the rank of
    their source; level_bounds[k]:level_bounds[k+1] slices the edges leaving rank k.
    """
    shape: Shape
    pos_masks: np.ndarray
    neg_masks: np.ndarray
    ranks: np.ndarray
    complements: np.ndarray
    edge_src: np.ndarray
    edge_dst: np.ndarray
    level_bounds: np.ndarray

    def __len__(self) -> int:
        return self.shape.size

    @property
    def max_rank(self) -> int:
        r, m = self.shape.r, self.shape.m
        return r * (r + 1) // 2 + m * (m + 1) // 2

    def index_of(self, w: LatticeString) -> int:
        if w.shape != self.shape:
            raise ShapeMismatchError(f"{w} belongs to {w.shape}, table is {self.shape}")
        return ((self.shape.pos_full - w.pos) << self.shape.m) | (self.shape.neg_full - w.neg)

    def element(self, i: int) -> LatticeString:
        return LatticeString(self.shape, int(self.pos_masks[i]), int(self.neg_masks[i]))

    def elements(self) -> Iterator[LatticeString]:
        for i in range(len(self)):
            yield self.element(i)

    def mask_of(self, strings: Iterable[LatticeString]) -> np.ndarray:
        mask = np.zeros(len(self), dtype=bool)
        for w in strings:
            mask[self.index_of(w)] = True
        return mask

    def strings(self, mask: np.ndarray) -> List[LatticeString]:
        """Elements selected by a boolean mask, in canonical order"""
        return [self.element(int(i)) for i in np.flatnonzero(mask)]

    def upset_mask(self, seeds: np.ndarray) -> np.ndarray:
        mask = seeds.copy()
        for k in range(len(self.level_bounds) - 1):
            lo, hi = self.level_bounds[k], self.level_bounds[k + 1]
            src, dst = self.edge_src[lo:hi], self.edge_dst[lo:hi]
            mask[dst[mask[src]]] = True
        return mask

    def downset_mask(self, seeds: np.ndarray) -> np.ndarray:
        mask = seeds.copy()
        for k in range(len(self.level_bounds) - 2, -1, -1):
            lo, hi = self.level_bounds[k], self.level_bounds[k + 1]
            src, dst = self.edge_src[lo:hi], self.edge_dst[lo:hi]
            mask[src[mask[dst]]] = True
        return mask


def _cover_edges(shape: Shape, pos: np.ndarray, neg: np.ndarray):
    r, m = shape.r, shape.m

    def index(p, q):
        return ((shape.pos_full - p) << m) | (shape.neg_full - q)

    sources, targets = [], []

    def add(applies: np.ndarray, new_pos: np.ndarray, new_neg: np.ndarray):
        idx = np.flatnonzero(applies)
        sources.append(idx)
        targets.append(index(new_pos[idx], new_neg[idx]))

    add((pos & 1) == 0, pos | 1, neg)
    for i in range(r - 1):
        applies = ((pos >> i) & 1 == 1) & ((pos >> (i + 1)) & 1 == 0)
        add(applies, pos ^ (3 << i), neg)
    if m > 0:
        add((neg & 1) == 1, pos, neg ^ 1)
    for j in range(1, m):
        applies = ((neg >> j) & 1 == 1) & ((neg >> (j - 1)) & 1 == 0)
        add(applies, pos, neg ^ (3 << (j - 1)))

    return np.concatenate(sources), np.concatenate(targets)


@lru_cache(maxsize=64)
def _build_table(shape: Shape) -> LatticeTable:
    logger.debug(f"Building lattice table for {shape}")
    r, m = shape.r, shape.m
    index = np.arange(shape.size, dtype=np.int64)
    pos = shape.pos_full - (index >> m)
    neg = shape.neg_full - (index & shape.neg_full)

    ranks = np.zeros(shape.size, dtype=np.int64)
    for b in range(r):
        ranks += ((pos >> b) & 1) * (b + 1)
    for b in range(m):
        ranks += (1 - ((neg >> b) & 1)) * (b + 1)

    complements = (pos << m) | neg

    src, dst = _cover_edges(shape, pos, neg)
    order = np.argsort(ranks[src], kind="stable")
    src, dst = src[order], dst[order]
    max_rank = r * (r + 1) // 2 + m * (m + 1) // 2
    level_bounds = np.searchsorted(ranks[src], np.arange(max_rank + 1), side="left")

    for array in (pos, neg, ranks, complements, src, dst, level_bounds):
        array.flags.writeable = False

    return LatticeTable(
        shape=shape,
        pos_masks=pos,
        neg_masks=neg,
        ranks=ranks,
        complements=complements,
        edge_src=src,
        edge_dst=dst,
        level_bounds=level_bounds,
    )


def lattice_table(shape: Shape, n_max: Optional[int] = None) -> LatticeTable:
    """Cached table for a shape; n must not exceed N_MAX"""
    shape.require_enumerable(n_max)
    return _build_table(shape)


def enumerate_strings(shape: Shape, n_max: Optional[int] = None) -> List[LatticeString]:
    """All 2^n elements in canonical order"""
    return list(lattice_table(shape, n_max).elements())


def bottom(shape: Shape) -> LatticeString:
    """0...0|12...(n-r)"""
    return LatticeString(shape, 0, shape.neg_full)


def top(shape: Shape) -> LatticeString:
    """r...21|0...0"""
    return LatticeString(shape, shape.pos_full, 0)


def _common_table(strings: List[LatticeString]) -> Optional[LatticeTable]:
    if not strings:
        return None
    shapes = {w.shape for w in strings}
    if len(shapes) > 1:
        raise ShapeMismatchError(f"Mixed shapes: {sorted(str(s) for s in shapes)}")
    return lattice_table(strings[0].shape)


def upset(strings: Iterable[LatticeString]) -> Set[LatticeString]:
    """Smallest up-set containing the given elements"""
    strings = list(strings)
    table = _common_table(strings)
    if table is None:
        return set()
    return set(table.strings(table.upset_mask(table.mask_of(strings))))


def downset(strings: Iterable[LatticeString]) -> Set[LatticeString]:
    """Smallest down-set containing the given elements"""
    strings = list(strings)
    table = _common_table(strings)
    if table is None:
        return set()
    return set(table.strings(table.downset_mask(table.mask_of(strings))))


def is_antichain(strings: Iterable[LatticeString]) -> bool:
    items = list(dict.fromkeys(strings))
    _common_table(items)
    for i, v in enumerate(items):
        for w in items[i + 1:]:
            if leq(v, w) or leq(w, v):
                return False
    return True
