"""Pydantic Models"""
from .lattice import (
    OutputFormat,
    ColorBy,
    WeightFunctionModel,
    BooleanMapModel,
    BasisModel,
    DecompositionReport,
    LatticeModel,
    CommandConfig,
)

__all__ = [
    "OutputFormat",
    "ColorBy",
    "WeightFunctionModel",
    "BooleanMapModel",
    "BasisModel",
    "DecompositionReport",
    "LatticeModel",
    "CommandConfig",
]
