"""
Partial order, lattice operations, complement and rank on S(n,r)

Symbols are compared through their signed values under the total order
bar(n-r) < ... < bar(1) < 0 < tilde(1) < ... < tilde(r): a tilde index i
is worth +i, a bar index j is worth -j and the padding symbol is worth 0.
"""
from typing import FrozenSet, List, Tuple

from ..errors import ShapeMismatchError
from .strings import make_string, negative_symbols, positive_symbols
from .types import LatticeString

Moves = List[Tuple[int, int]]


def _same_shape(v: LatticeString, w: LatticeString) -> None:
    if v.shape != w.shape:
        raise ShapeMismatchError(f"Shapes differ: {v.shape} and {w.shape}")


def _signed_sequence(w: LatticeString) -> List[int]:
    """Padded symbol sequence of both sides as signed values"""
    return positive_symbols(w) + [-j for j in negative_symbols(w)]


def _from_sequence(template: LatticeString, values: List[int]) -> LatticeString:
    return make_string(
        template.shape,
        [v for v in values if v > 0],
        [-v for v in values if v < 0],
    )


def leq(v: LatticeString, w: LatticeString) -> bool:
    """v is below w iff every padded component of v is below that of w"""
    _same_shape(v, w)
    return all(a <= b for a, b in zip(_signed_sequence(v), _signed_sequence(w)))


def meet(v: LatticeString, w: LatticeString) -> LatticeString:
    _same_shape(v, w)
    return _from_sequence(v, [min(a, b) for a, b in zip(_signed_sequence(v), _signed_sequence(w))])


def join(v: LatticeString, w: LatticeString) -> LatticeString:
    _same_shape(v, w)
    return _from_sequence(v, [max(a, b) for a, b in zip(_signed_sequence(v), _signed_sequence(w))])


def complement(w: LatticeString) -> LatticeString:
    return LatticeString(w.shape, w.pos ^ w.shape.pos_full, w.neg ^ w.shape.neg_full)


def to_subset(w: LatticeString) -> FrozenSet[int]:
    """
    Image of w in I(n,r): tilde indices as positive ints, bar indices as negative ints.

    4310|013 maps to {1, 3, 4, -1, -3}; the all-padding string maps to the empty set.
    """
    return frozenset(w.pos_set) | frozenset(-j for j in w.neg_set)


def rank(w: LatticeString) -> int:
    """Height above 0...0|12...(n-r); one step per unit increase of a signed component"""
    missing = w.shape.neg_full ^ w.neg
    return sum(w.pos_set) + sum(j + 1 for j in range(w.shape.m) if missing >> j & 1)


def up_moves(pos: int, neg: int, r: int, m: int) -> Moves:
    """Covers of (pos, neg) as mask pairs"""
    moves = []
    if not pos & 1:
        moves.append((pos | 1, neg))
    for i in range(r - 1):
        bit = 1 << i
        if pos & bit and not pos & (bit << 1):
            moves.append((pos ^ bit ^ (bit << 1), neg))
    if neg & 1:
        moves.append((pos, neg ^ 1))
    for j in range(1, m):
        bit = 1 << j
        if neg & bit and not neg & (bit >> 1):
            moves.append((pos, neg ^ bit ^ (bit >> 1)))
    return moves


def down_moves(pos: int, neg: int, r: int, m: int) -> Moves:
    """Elements covered by (pos, neg) as mask pairs"""
    moves = []
    if pos & 1:
        moves.append((pos ^ 1, neg))
    for i in range(r - 1):
        bit = 1 << i
        if pos & (bit << 1) and not pos & bit:
            moves.append((pos ^ bit ^ (bit << 1), neg))
    if not neg & 1 and m > 0:
        moves.append((pos, neg | 1))
    for j in range(m - 1):
        bit = 1 << j
        if neg & bit and not neg & (bit << 1):
            moves.append((pos, neg ^ bit ^ (bit << 1)))
    return moves


def covers(w: LatticeString) -> List[LatticeString]:
    """All u with w strictly below u and nothing strictly between"""
    shape = w.shape
    return sorted(
        (LatticeString(shape, p, q) for p, q in up_moves(w.pos, w.neg, shape.r, shape.m)),
        key=lambda u: (-u.pos, -u.neg),
    )


def covered_by(w: LatticeString) -> List[LatticeString]:
    """All u that w covers"""
    shape = w.shape
    return sorted(
        (LatticeString(shape, p, q) for p, q in down_moves(w.pos, w.neg, shape.r, shape.m)),
        key=lambda u: (-u.pos, -u.neg),
    )
