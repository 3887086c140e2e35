"""
Raw real inputs for the subset-sum census
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from ..errors import WeightFunctionError
from ..rationals import RationalLike, format_rational, parse_rational, parse_rational_list
from ..weights import WeightFunction


@dataclass(frozen=True)
class RealMultiset:
    """
    Unordered list of n exact rationals; r counts the non-negative ones (zero included).
    """
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(parse_rational(v) for v in self.values)
        if not values:
            raise WeightFunctionError("A census needs at least one value")
        object.__setattr__(self, "values", values)

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "RealMultiset":
        return cls(values=tuple(values))

    @classmethod
    def from_text(cls, text: str) -> "RealMultiset":
        """Parse "1,1,0.9,-0.8,-2.1" """
        return cls(values=tuple(parse_rational_list(text)))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def r(self) -> int:
        return sum(1 for v in self.values if v >= 0)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))

    def canonical(self) -> Tuple[Fraction, ...]:
        """Values sorted descending"""
        return tuple(sorted(self.values, reverse=True))

    def to_weight_function(self) -> WeightFunction:
        """Monotone representative with the same subset sums"""
        return WeightFunction.from_values(self.values)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in self.values)


@dataclass(frozen=True)
class Signature:
    n: int
    r: int
    in_w: bool

    def as_dict(self) -> Dict:
        return {"n": self.n, "r": self.r, "in_W": self.in_w}
