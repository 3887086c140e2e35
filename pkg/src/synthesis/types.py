"""
Data types for the prescribed-count construction
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional

from ..lattice import LatticeString, PropertyCheck, Shape
from ..maps import Basis, BooleanMap


class BasisCase(str, Enum):
    """a1: alpha is above T+; a2: alpha joins Y+; extremal: no level decomposition"""
    A1 = "a1"
    A2 = "a2"
    EXTREMAL = "extremal"


@dataclass
class RankLevels:
    """
    Levels of S1_PM counted from the top: levels[i] holds the elements at
    height R - i above b1, each level in canonical order.
    """
    shape: Shape
    R: int
    levels: List[List[LatticeString]]

    @property
    def betas(self) -> List[int]:
        return [len(level) for level in self.levels]

    def level(self, i: int) -> List[LatticeString]:
        """Level i, empty outside 0..R"""
        if 0 <= i <= self.R:
            return self.levels[i]
        return []

    def as_dict(self) -> Dict:
        return {
            "n": self.shape.n,
            "r": self.shape.r,
            "R": self.R,
            "betas": self.betas,
            "levels": [[str(w) for w in level] for level in self.levels],
        }


@dataclass
class LevelDecomposition:
    """
    q = 2^(n-1) + p with p = betas[0] + ... + betas[k] + s and 0 <= s < betas[k+1].

    v_chosen are the first s elements of level k+1. Level k splits into the
    elements above some chosen v (t_above) and the rest (t_rest); level k+2
    splits into the elements below some unchosen v (z_below) and the rest
    (z_rest, of size m_z).
    """
    shape: Shape
    rank_levels: RankLevels
    p: int
    k: int
    s: int
    v_chosen: List[LatticeString]
    v_rest: List[LatticeString]
    t_above: List[LatticeString]
    t_rest: List[LatticeString]
    z_below: List[LatticeString]
    z_rest: List[LatticeString]

    @property
    def R(self) -> int:
        return self.rank_levels.R

    @property
    def levels(self) -> List[List[LatticeString]]:
        return self.rank_levels.levels

    @property
    def betas(self) -> List[int]:
        return self.rank_levels.betas

    @property
    def m_z(self) -> int:
        return len(self.z_rest)

    @property
    def t_plus(self) -> List[LatticeString]:
        return self.v_chosen + self.t_rest

    @property
    def t_minus(self) -> List[LatticeString]:
        return self.v_rest + self.z_rest

    @property
    def upper_levels(self) -> List[LatticeString]:
        """Levels 0..k"""
        return [w for level in self.levels[: self.k + 1] for w in level]

    @property
    def lower_levels(self) -> List[LatticeString]:
        """Levels k+2..R"""
        return [w for level in self.levels[self.k + 2:] for w in level]


@dataclass
class SynthesisResult:
    shape: Shape
    q: int
    map: BooleanMap
    case: BasisCase
    decomposition: Optional[LevelDecomposition] = None
    basis: Optional[Basis] = None


@dataclass
class SynthesisReport:
    shape: Shape
    q: int
    case: BasisCase
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> Dict:
        return {
            "n": self.shape.n,
            "r": self.shape.r,
            "q": self.q,
            "case": self.case.value,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "counterexamples": c.counterexamples}
                for c in self.checks
            ],
        }
