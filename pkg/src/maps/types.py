"""
Boolean maps on S(n,r) and bases of antichains
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List

import numpy as np

from ..errors import InvalidBasisError, ShapeMismatchError
from ..lattice import LatticeString, Shape, is_antichain, lattice_table


class Truth(str, Enum):
    """Values of the two-element lattice 2"""
    N = "N"
    P = "P"


@dataclass(frozen=True, eq=False)
class BooleanMap:
    """
    Total map S(n,r) -> {N, P}, stored densely over the canonical order.

    values[i] is True where element i maps to P.
    """
    shape: Shape
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.shape.size,) or self.values.dtype != bool:
            raise ShapeMismatchError(
                f"Map values must be a boolean vector of length {self.shape.size}"
            )
        if self.values.flags.writeable:
            frozen = self.values.copy()
            frozen.flags.writeable = False
            object.__setattr__(self, "values", frozen)

    @classmethod
    def from_positives(cls, shape: Shape, positives: Iterable[LatticeString]) -> "BooleanMap":
        return cls(shape=shape, values=lattice_table(shape).mask_of(positives))

    @classmethod
    def constant(cls, shape: Shape, value: Truth) -> "BooleanMap":
        lattice_table(shape)
        return cls(shape=shape, values=np.full(shape.size, Truth(value) is Truth.P, dtype=bool))

    def __call__(self, w: LatticeString) -> Truth:
        return Truth.P if self.is_positive(w) else Truth.N

    def is_positive(self, w: LatticeString) -> bool:
        return bool(self.values[lattice_table(self.shape).index_of(w)])

    @property
    def positive_count(self) -> int:
        return int(self.values.sum())

    @property
    def positives(self) -> FrozenSet[LatticeString]:
        return frozenset(self.positive_list())

    def positive_list(self) -> List[LatticeString]:
        """Positive elements in canonical order"""
        return lattice_table(self.shape).strings(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanMap):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.values, other.values))

    __hash__ = None


def positive_count(A: BooleanMap) -> int:
    """|S_A^+|, the number of elements mapped to P"""
    return A.positive_count


@dataclass(frozen=True)
class Basis:
    """
    Ordered pair <Y+ | Y-> of disjoint antichains.

    Disjointness and the antichain property are enforced at construction;
    B1-B3 are checked separately.
    """
    shape: Shape
    y_plus: FrozenSet[LatticeString]
    y_minus: FrozenSet[LatticeString]

    def __post_init__(self):
        object.__setattr__(self, "y_plus", frozenset(self.y_plus))
        object.__setattr__(self, "y_minus", frozenset(self.y_minus))
        for w in self.y_plus | self.y_minus:
            if w.shape != self.shape:
                raise ShapeMismatchError(f"{w} belongs to {w.shape}, basis is {self.shape}")
        common = self.y_plus & self.y_minus
        if common:
            raise InvalidBasisError(
                f"Y+ and Y- must be disjoint; both contain {sorted(str(w) for w in common)}"
            )
        if not is_antichain(self.y_plus):
            raise InvalidBasisError("Y+ is not an antichain")
        if not is_antichain(self.y_minus):
            raise InvalidBasisError("Y- is not an antichain")

    def sorted_plus(self) -> List[LatticeString]:
        table = lattice_table(self.shape)
        return sorted(self.y_plus, key=table.index_of)

    def sorted_minus(self) -> List[LatticeString]:
        table = lattice_table(self.shape)
        return sorted(self.y_minus, key=table.index_of)
