"""
census: count non-negative subset sums of raw values
"""
from ..census import RealMultiset, census
from ..models import CommandConfig, OutputFormat
from .output import emit, lines, status, to_json


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("census", parents=parents,
                                   help="Count nonempty subsets with non-negative sum")
    parser.add_argument("values", help='Comma-separated rationals, e.g. "1,1,0.9,-0.8,-2.1"')
    parser.add_argument("--expect-range", action="store_true",
                        help="Fail unless the count lies in [gamma, eta]")
    parser.set_defaults(handler=run)


def run(config: CommandConfig) -> int:
    report = census(RealMultiset.from_text(config.values))

    if config.format is OutputFormat.JSON:
        emit(to_json(report.as_dict()), config.out)
    else:
        emit(lines(report.lines()), config.out)

    passed = report.agree
    if config.expect_range:
        passed = passed and report.position in ("minimum", "maximum", "interior")
    return status(passed)
