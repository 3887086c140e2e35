# Verification stages
from .lemma import LemmaStage
from .extremes import ExtremesStage
from .q_sweep import QSweepStage
from .samples import SamplesStage

__all__ = [
    "LemmaStage",
    "ExtremesStage",
    "QSweepStage",
    "SamplesStage",
]
