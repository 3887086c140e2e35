"""
(n,r)-weight functions

Values are kept as exact Fractions. ``pos_values[i-1]`` is the value of the
tilde index i and ``neg_values[j-1]`` that of the bar index j. Text and JSON
inputs list the positive side the way strings print it, highest index first.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from ..errors import WeightFunctionError
from ..lattice import Shape
from ..rationals import RationalLike, format_rational, parse_rational, parse_rational_list


@dataclass(frozen=True)
class WeightFunction:
    shape: Shape
    pos_values: Tuple[Fraction, ...]
    neg_values: Tuple[Fraction, ...]

    def __post_init__(self):
        pos = tuple(parse_rational(v) for v in self.pos_values)
        neg = tuple(parse_rational(v) for v in self.neg_values)
        if len(pos) != self.shape.r or len(neg) != self.shape.m:
            raise WeightFunctionError(
                f"Shape {self.shape} needs {self.shape.r} non-negative and {self.shape.m} "
                f"negative values, got {len(pos)} and {len(neg)}"
            )
        object.__setattr__(self, "pos_values", pos)
        object.__setattr__(self, "neg_values", neg)

    @classmethod
    def from_display(
        cls,
        shape: Shape,
        pos: Sequence[RationalLike],
        neg: Sequence[RationalLike],
    ) -> "WeightFunction":
        """Build from values written as f(r~),...,f(1~) | f(1-),...,f((n-r)-)"""
        return cls(shape=shape, pos_values=tuple(reversed(list(pos))), neg_values=tuple(neg))

    @classmethod
    def from_values(cls, values: Iterable[RationalLike]) -> "WeightFunction":
        """
        Canonical representative of an arbitrary multiset of reals.

        Non-negative values go onto r~,...,1~ in descending order and negative
        values onto 1-,...,(n-r)- in descending order, which yields a
        monotone function with the same subset sums.
        """
        values = [parse_rational(v) for v in values]
        nonneg = sorted(v for v in values if v >= 0)
        negative = sorted((v for v in values if v < 0), reverse=True)
        if not nonneg:
            raise WeightFunctionError("A weight function needs at least one non-negative value")
        shape = Shape(len(values), len(nonneg))
        return cls(shape=shape, pos_values=tuple(nonneg), neg_values=tuple(negative))

    @classmethod
    def parse(cls, shape: Shape, text: str) -> "WeightFunction":
        """
        Parse "1,1,0.9|-0.8,-2.1" (display order, sides split by '|').

        A flat list without '|' is split after the first r values.
        """
        if "|" in text:
            left, _, right = text.partition("|")
            if "|" in right:
                raise WeightFunctionError(f"More than one '|' in {text!r}")
            pos = parse_rational_list(left) if left.strip() else []
            neg = parse_rational_list(right) if right.strip() else []
        else:
            values = parse_rational_list(text)
            pos, neg = values[:shape.r], values[shape.r:]
        return cls.from_display(shape, pos, neg)

    @property
    def display_pos(self) -> Tuple[Fraction, ...]:
        """f(r~),...,f(1~)"""
        return tuple(reversed(self.pos_values))

    @property
    def values(self) -> List[Fraction]:
        """All n values, positive side in display order first"""
        return list(self.display_pos) + list(self.neg_values)

    @property
    def total(self) -> Fraction:
        return sum(self.pos_values, Fraction(0)) + sum(self.neg_values, Fraction(0))

    def __str__(self) -> str:
        left = ",".join(format_rational(v) for v in self.display_pos)
        right = ",".join(format_rational(v) for v in self.neg_values)
        return f"({left}|{right})"
