"""
Core data types for the signed-index lattice S(n,r)
"""
from dataclasses import dataclass
from typing import FrozenSet, Optional

from ..config import get_settings
from ..errors import ShapeError


@dataclass(frozen=True)
class Shape:
    """
    The pair (n, r): n indices, r of them non-negative (tilde), n - r negative (bar).
    """
    n: int
    r: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.r, int):
            raise ShapeError(f"Shape components must be integers, got ({self.n!r}, {self.r!r})")
        if not 1 <= self.r <= self.n:
            raise ShapeError(f"Shape ({self.n},{self.r}) violates 1 <= r <= n")

    @property
    def m(self) -> int:
        """Number of negative (bar) indices"""
        return self.n - self.r

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def pos_full(self) -> int:
        return (1 << self.r) - 1

    @property
    def neg_full(self) -> int:
        return (1 << self.m) - 1

    @property
    def gamma(self) -> int:
        """Minimum number of non-negative nonempty partial sums"""
        return 1 << (self.n - 1)

    @property
    def eta(self) -> int:
        """Maximum number of non-negative nonempty partial sums"""
        return (1 << self.n) - (1 << self.m)

    @property
    def compact(self) -> bool:
        """Single-digit symbols suffice for rendering"""
        return max(self.r, self.m) <= 9

    def require_negatives(self) -> "Shape":
        """Operations of the region atlas and synthesis need 0 < r < n"""
        if self.r == self.n:
            raise ShapeError(f"Shape ({self.n},{self.r}) has no negative indices; r < n is required")
        return self

    def require_enumerable(self, n_max: Optional[int] = None) -> "Shape":
        limit = n_max if n_max is not None else get_settings().lattice.n_max
        if self.n > limit:
            raise ShapeError(f"n = {self.n} exceeds the enumeration bound N_MAX = {limit}")
        return self

    def __str__(self) -> str:
        return f"({self.n},{self.r})"


@dataclass(frozen=True)
class LatticeString:
    """
    Element of S(n,r), stored as two bit sets.

    Bit i-1 of ``pos`` marks the tilde index i; bit j-1 of ``neg`` marks the bar index j.
    """
    shape: Shape
    pos: int
    neg: int

    @property
    def pos_set(self) -> FrozenSet[int]:
        return frozenset(i + 1 for i in range(self.shape.r) if self.pos >> i & 1)

    @property
    def neg_set(self) -> FrozenSet[int]:
        return frozenset(j + 1 for j in range(self.shape.m) if self.neg >> j & 1)

    def __str__(self) -> str:
        from .strings import render_string
        return render_string(self)
