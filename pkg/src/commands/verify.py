"""
verify: region properties, extremal counts, q-sweep and random samples for one shape
"""
import logging

from ..models import CommandConfig, OutputFormat
from ..pipeline import VerificationConfig, VerificationPipeline, VerificationProgress
from .output import emit, lines, status, to_json

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("verify", parents=parents, help="Run the verification suite")
    parser.add_argument("n", type=int)
    parser.add_argument("r", type=int)
    parser.add_argument("--q-sweep", action="store_true")
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(handler=run)


def _log_progress(progress: VerificationProgress) -> None:
    if progress.items_processed == 0 or progress.items_processed == progress.items_total:
        logger.info(f"[{progress.stage_number}/{progress.total_stages}] {progress.message} "
                    f"({progress.items_processed}/{progress.items_total})")


def run(config: CommandConfig) -> int:
    shape = config.shape
    shape.require_enumerable()
    verification = VerificationConfig.from_settings(
        q_sweep=config.q_sweep, samples=config.samples, seed=config.seed
    )
    pipeline = VerificationPipeline(workers=verification.workers)
    pipeline.on_progress(_log_progress)
    report = pipeline.run(shape, verification)

    if config.format is OutputFormat.JSON:
        emit(to_json(report.as_dict()), config.out)
        return status(report.passed)

    text = [f"shape: {shape}", f"A(n) = {report.a_n}"]
    if report.lemma is not None:
        for check in report.lemma.checks:
            text.append(f"lemma {check.name}: {'ok' if check.passed else 'FAILED'}")
    if report.extremes is not None:
        e = report.extremes
        text.append(f"extremes: alpha(min) = {e.alpha_min} (gamma = {e.gamma}), "
                    f"alpha(max) = {e.alpha_max} (eta = {e.eta}): {'ok' if e.passed else 'FAILED'}")
    if report.q_sweep is not None:
        passed = sum(1 for s in report.q_sweep if s.passed)
        text.append(f"q-sweep: {passed}/{len(report.q_sweep)} q values pass")
        for s in report.q_sweep:
            if not s.passed:
                text.append(f"  q = {s.q}: {s.failed}")
    if report.samples is not None:
        samples = report.samples
        text.append(f"samples: {samples.within}/{len(samples.outcomes)} within bounds (seed {samples.seed})")
    text.append(f"result: {'passed' if report.passed else 'FAILED'}")
    emit(lines(text), config.out)
    return status(report.passed)
