"""
extremes: the minimizing or maximizing weight function and its count
"""
import logging

from ..models import CommandConfig, OutputFormat, WeightFunctionModel
from ..pipeline.stages import ExtremesStage
from .output import emit, lines, status, to_json

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("extremes", parents=parents,
                                   help="Extremal weight functions against the closed-form bounds")
    parser.add_argument("n", type=int)
    parser.add_argument("r", type=int)
    parser.add_argument("which", choices=["min", "max"])
    parser.set_defaults(handler=run)


def run(config: CommandConfig) -> int:
    shape = config.shape.require_negatives()
    report = ExtremesStage().execute(shape)

    if config.which == "min":
        wf, count, census_count, bound = report.minimizer, report.alpha_min, report.census_min, report.gamma
        witness, formula = report.gamma_star_witness, "2^(n-1)"
    else:
        wf, count, census_count, bound = report.maximizer, report.alpha_max, report.census_max, report.eta
        witness, formula = report.eta_star_witness, "2^n - 2^(n-r)"
    passed = count == census_count == bound and witness

    if config.format is OutputFormat.JSON:
        emit(to_json({
            "n": shape.n,
            "r": shape.r,
            "which": config.which,
            "weights": WeightFunctionModel.from_domain(wf).model_dump(),
            "alpha": count,
            "census": census_count,
            "bound": bound,
            "boolean_map_witness": witness,
            "passed": passed,
        }), config.out)
    else:
        emit(lines([
            f"shape: {shape}",
            f"{'minimizer' if config.which == 'min' else 'maximizer'}: {wf}",
            f"alpha: {count}",
            f"census: {census_count}",
            f"bound: {formula} = {bound}",
            f"boolean map witness: {'ok' if witness else 'FAILED'}",
            f"result: {'ok' if passed else 'MISMATCH'}",
        ]), config.out)

    if not passed:
        logger.warning(f"extremes {config.which} on {shape}: alpha {count}, bound {bound}")
    return status(passed)
