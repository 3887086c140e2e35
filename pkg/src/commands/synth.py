"""
synth: build the W+ map with exactly q positive elements
"""
import logging
from pathlib import Path
from typing import Any, Dict

from ..models import BasisModel, BooleanMapModel, CommandConfig, DecompositionReport, OutputFormat
from ..synthesis import synthesize, verify_synthesis
from .output import EXIT_OK, emit, lines, status, to_json

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("synth", parents=parents,
                                   help="Boolean map in W+(n,r) with q positive elements")
    parser.add_argument("n", type=int)
    parser.add_argument("r", type=int)
    parser.add_argument("q", type=int)
    parser.add_argument("--with-basis", action="store_true")
    parser.add_argument("--verify", action="store_true")
    parser.add_argument("--emit", type=Path, default=None, help="Write map and basis JSON here")
    parser.set_defaults(handler=run)


def run(config: CommandConfig) -> int:
    shape = config.shape
    result = synthesize(shape, config.q)
    decomposition = DecompositionReport.from_domain(shape, config.q, result.case, result.decomposition)

    payload: Dict[str, Any] = {
        "map": BooleanMapModel.from_domain(result.map).model_dump(),
        "decomposition": decomposition.model_dump(mode="json"),
        "basis": BasisModel.from_domain(result.basis).model_dump() if result.basis else None,
    }
    if config.emit is not None:
        Path(config.emit).write_text(to_json(payload) + "\n", encoding="utf-8")
        logger.info(f"Wrote map for q={config.q} to {config.emit}")

    report = verify_synthesis(shape, config.q) if config.verify else None

    if config.format is OutputFormat.JSON:
        if not config.with_basis:
            payload.pop("basis")
        if report is not None:
            payload["verification"] = report.as_dict()
        emit(to_json(payload), config.out)
    else:
        text = [
            f"shape: {shape}, q = {config.q}",
            f"case: {result.case.value}",
            f"positive count: {result.map.positive_count}",
            f"positives: {' '.join(str(w) for w in result.map.positive_list())}",
        ]
        d = result.decomposition
        if d is not None:
            text.append(f"decomposition: R={d.R} betas={d.betas} p={d.p} k={d.k} s={d.s}")
        if config.with_basis:
            if result.basis is None:
                text.append("basis: not applicable (extremal construction)")
            else:
                text.append("Y+: {" + ", ".join(str(w) for w in result.basis.sorted_plus()) + "}")
                text.append("Y-: {" + ", ".join(str(w) for w in result.basis.sorted_minus()) + "}")
        if report is not None:
            text.append(f"verification: {'passed' if report.passed else 'FAILED'} "
                        f"({len(report.checks)} checks)")
            for check in report.checks:
                if not check.passed:
                    text.append(f"  {check.name}: {check.counterexamples[:3]}")
        emit(lines(text), config.out)

    if report is None:
        return EXIT_OK
    return status(report.passed)
