"""
rank-levels: R and the level sizes of S1_PM
"""
from ..models import CommandConfig, OutputFormat
from ..synthesis import rank_levels
from .output import EXIT_OK, emit, lines, to_json


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("rank-levels", parents=parents, help="Rank levels of S1_PM")
    parser.add_argument("n", type=int)
    parser.add_argument("r", type=int)
    parser.set_defaults(handler=run)


def run(config: CommandConfig) -> int:
    levels = rank_levels(config.shape)
    if config.format is OutputFormat.JSON:
        emit(to_json(levels.as_dict()), config.out)
        return EXIT_OK

    text = [f"R = {levels.R}", f"betas = {levels.betas}"]
    for i, level in enumerate(levels.levels):
        text.append(f"level {i}: {' '.join(str(w) for w in level)}")
    emit(lines(text), config.out)
    return EXIT_OK
