"""
Pydantic models for the JSON forms of lattice objects and command settings
"""
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..lattice import Shape, lattice_table, parse_string
from ..maps import Basis, BooleanMap
from ..rationals import format_rational
from ..synthesis import BasisCase, LevelDecomposition
from ..weights import WeightFunction


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class ColorBy(str, Enum):
    """Node colouring of Hasse diagrams"""
    REGIONS = "regions"
    MAP = "map"
    NONE = "none"


def _as_text(values: List) -> List[str]:
    return [v if isinstance(v, str) else str(v) for v in values]


# ============================================================================
# WEIGHT FUNCTIONS
# ============================================================================

class WeightFunctionModel(BaseModel):
    """Weight function; pos lists f(r~),...,f(1~), neg lists f(1-),...,f((n-r)-)"""
    n: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    pos: List[str]
    neg: List[str] = Field(default_factory=list)

    @field_validator("pos", "neg", mode="before")
    @classmethod
    def numbers_as_text(cls, v):
        return _as_text(v) if isinstance(v, list) else v

    @model_validator(mode="after")
    def check_lengths(self) -> "WeightFunctionModel":
        if self.r > self.n:
            raise ValueError(f"r = {self.r} exceeds n = {self.n}")
        if len(self.pos) != self.r or len(self.neg) != self.n - self.r:
            raise ValueError(
                f"Expected {self.r} pos and {self.n - self.r} neg values, "
                f"got {len(self.pos)} and {len(self.neg)}"
            )
        return self

    def to_domain(self) -> WeightFunction:
        return WeightFunction.from_display(Shape(self.n, self.r), self.pos, self.neg)

    @classmethod
    def from_domain(cls, wf: WeightFunction) -> "WeightFunctionModel":
        return cls(
            n=wf.shape.n,
            r=wf.shape.r,
            pos=[format_rational(v) for v in wf.display_pos],
            neg=[format_rational(v) for v in wf.neg_values],
        )


# ============================================================================
# BOOLEAN MAPS AND BASES
# ============================================================================

class BooleanMapModel(BaseModel):
    """Boolean map given by its P-valued elements, in canonical order"""
    n: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    positives: List[str] = Field(default_factory=list)

    def to_domain(self) -> BooleanMap:
        shape = Shape(self.n, self.r)
        return BooleanMap.from_positives(shape, [parse_string(shape, s) for s in self.positives])

    @classmethod
    def from_domain(cls, A: BooleanMap) -> "BooleanMapModel":
        return cls(n=A.shape.n, r=A.shape.r, positives=[str(w) for w in A.positive_list()])


class BasisModel(BaseModel):
    n: int = Field(..., ge=1)
    r: int = Field(..., ge=1)
    y_plus: List[str]
    y_minus: List[str]

    def to_domain(self) -> Basis:
        shape = Shape(self.n, self.r)
        return Basis(
            shape=shape,
            y_plus=frozenset(parse_string(shape, s) for s in self.y_plus),
            y_minus=frozenset(parse_string(shape, s) for s in self.y_minus),
        )

    @classmethod
    def from_domain(cls, b: Basis) -> "BasisModel":
        return cls(
            n=b.shape.n,
            r=b.shape.r,
            y_plus=[str(w) for w in b.sorted_plus()],
            y_minus=[str(w) for w in b.sorted_minus()],
        )


class DecompositionReport(BaseModel):
    """Level decomposition behind a synthesized map"""
    R: Optional[int] = None
    betas: List[int] = Field(default_factory=list)
    p: int
    k: Optional[int] = None
    s: Optional[int] = None
    v_chosen: List[str] = Field(default_factory=list)
    case: BasisCase

    @classmethod
    def from_domain(cls, shape: Shape, q: int, case: BasisCase,
                    d: Optional[LevelDecomposition]) -> "DecompositionReport":
        p = q - shape.gamma
        if d is None:
            return cls(p=p, case=case)
        return cls(R=d.R, betas=d.betas, p=p, k=d.k, s=d.s,
                   v_chosen=[str(w) for w in d.v_chosen], case=case)


class LatticeModel(BaseModel):
    """Elements in canonical order and cover pairs (lower, upper)"""
    n: int
    r: int
    elements: List[str]
    edges: List[Tuple[str, str]]

    @classmethod
    def from_shape(cls, shape: Shape) -> "LatticeModel":
        table = lattice_table(shape)
        labels = [str(w) for w in table.elements()]
        order = sorted(range(len(table.edge_src)),
                       key=lambda e: (int(table.edge_src[e]), int(table.edge_dst[e])))
        edges = [(labels[int(table.edge_src[e])], labels[int(table.edge_dst[e])]) for e in order]
        return cls(n=shape.n, r=shape.r, elements=labels, edges=edges)


# ============================================================================
# COMMANDS
# ============================================================================

class CommandConfig(BaseModel):
    """Validated command-line settings, checked before any computation"""
    subcommand: str
    n: Optional[int] = Field(None, ge=1)
    r: Optional[int] = Field(None, ge=1)
    q: Optional[int] = None
    values: Optional[str] = None
    format: OutputFormat = OutputFormat.TEXT
    color_by: Optional[ColorBy] = None
    map_file: Optional[Path] = None
    weights_file: Optional[Path] = None
    seed: Optional[int] = None
    samples: Optional[int] = Field(None, ge=0)
    which: Optional[str] = None
    q_sweep: bool = False
    with_basis: bool = False
    verify: bool = False
    expect_range: bool = False
    emit: Optional[Path] = None
    out: Optional[Path] = None

    @model_validator(mode="after")
    def check_combinations(self) -> "CommandConfig":
        if self.n is not None and self.r is not None and self.r > self.n:
            raise ValueError(f"r = {self.r} exceeds n = {self.n}")
        if self.map_file is not None and self.weights_file is not None:
            raise ValueError("--map-file and --weights are mutually exclusive")
        if self.color_by is ColorBy.MAP and self.map_file is None and self.weights_file is None:
            raise ValueError("--color-by map needs --map-file or --weights")
        if self.format is OutputFormat.DOT and self.subcommand != "gen":
            raise ValueError("dot output is only available for gen")
        colouring = self.color_by is not None or self.map_file is not None or self.weights_file is not None
        if colouring and self.format is not OutputFormat.DOT:
            raise ValueError("--color-by, --map-file and --weights need --format dot")
        return self

    @property
    def shape(self) -> Shape:
        return Shape(self.n, self.r)
