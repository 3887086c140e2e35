"""
Verification Pipeline - Coordinates the lemma, extremes, q-sweep and sample stages
"""
import logging
from dataclasses import dataclass
from datetime import datetime
from typing import Callable, List, Optional

from ..config import get_settings
from ..lattice import Shape
from .stages.extremes import ExtremesStage
from .stages.lemma import LemmaStage
from .stages.q_sweep import QSweepStage
from .stages.samples import SamplesStage
from .types import VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class VerificationConfig:
    """Verification configuration"""
    q_sweep: bool = False
    samples: int = 0
    seed: int = 0
    workers: int = 1

    @classmethod
    def from_settings(cls, q_sweep: bool = False, samples: Optional[int] = None,
                      seed: Optional[int] = None) -> "VerificationConfig":
        sweep = get_settings().sweep
        return cls(
            q_sweep=q_sweep,
            samples=sweep.default_samples if samples is None else samples,
            seed=sweep.default_seed if seed is None else seed,
            workers=sweep.workers,
        )


@dataclass
class VerificationProgress:
    """Verification progress tracking"""
    stage: str
    stage_number: int
    total_stages: int
    items_processed: int
    items_total: int
    started_at: datetime
    message: str


class VerificationPipeline:
    """
    Main verification orchestrator.

    Shapes with r = n have no regions or extremal functions; only the
    sample stage runs for them.
    """

    def __init__(
        self,
        lemma_stage: Optional[LemmaStage] = None,
        extremes_stage: Optional[ExtremesStage] = None,
        q_sweep_stage: Optional[QSweepStage] = None,
        samples_stage: Optional[SamplesStage] = None,
        workers: int = 1,
    ):
        self.lemma = lemma_stage or LemmaStage()
        self.extremes = extremes_stage or ExtremesStage()
        self.q_sweep = q_sweep_stage or QSweepStage(workers=workers)
        self.samples = samples_stage or SamplesStage(workers=workers)

        self._progress_callback: Optional[Callable[[VerificationProgress], None]] = None

    def on_progress(self, callback: Callable[[VerificationProgress], None]):
        """Register progress callback"""
        self._progress_callback = callback

    def run(self, shape: Shape, config: VerificationConfig) -> VerificationReport:
        """Run every stage that applies to the shape"""

        started_at = datetime.now()
        report = VerificationReport(shape=shape)
        has_negatives = shape.r < shape.n

        stages: List[str] = []
        if has_negatives:
            stages += ["lemma", "extremes"]
            if config.q_sweep:
                stages.append("q_sweep")
        if config.samples > 0:
            stages.append("samples")
        total = len(stages) + 1

        def progress(stage: str, number: int, message: str):
            def on_item(done: int, items_total: int):
                self._report_progress(stage, number, total, done, items_total, message, started_at)
            return on_item

        for number, stage in enumerate(stages, start=1):
            if stage == "lemma":
                self._report_progress(stage, number, total, 0, 1,
                                      f"Checking region properties of {shape}...", started_at)
                report.lemma = self.lemma.execute(shape)

            elif stage == "extremes":
                self._report_progress(stage, number, total, 0, 2,
                                      f"Counting extremal weight functions on {shape}...", started_at)
                report.extremes = self.extremes.execute(shape)

            elif stage == "q_sweep":
                count = shape.eta - shape.gamma + 1
                message = f"Synthesizing {count} maps on {shape}..."
                self._report_progress(stage, number, total, 0, count, message, started_at)
                report.q_sweep = self.q_sweep.execute(shape, on_item=progress(stage, number, message))

            elif stage == "samples":
                message = f"Checking {config.samples} random weight functions (seed {config.seed})..."
                self._report_progress(stage, number, total, 0, config.samples, message, started_at)
                report.samples = self.samples.execute(
                    shape, config.samples, config.seed, on_item=progress(stage, number, message)
                )

        self._report_progress("complete", total, total, len(stages), len(stages),
                              "Verification complete!", started_at)
        logger.info(f"Verification of {shape} {'passed' if report.passed else 'FAILED'}")
        return report

    def _report_progress(
        self,
        stage: str,
        stage_number: int,
        total: int,
        items: int,
        items_total: int,
        message: str,
        started_at: datetime
    ):
        """Report progress to callback"""
        if self._progress_callback:
            self._progress_callback(VerificationProgress(
                stage=stage,
                stage_number=stage_number,
                total_stages=total,
                items_processed=items,
                items_total=items_total,
                started_at=started_at,
                message=message
            ))
