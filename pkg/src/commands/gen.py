"""
gen: enumerate S(n,r) as text, JSON or a coloured Hasse diagram
"""
import json
import logging
from pathlib import Path
from typing import Optional

from ..maps import BooleanMap
from ..models import BooleanMapModel, ColorBy, CommandConfig, OutputFormat, WeightFunctionModel
from ..services import HasseExporter
from ..weights import induced_map, validate
from .output import EXIT_OK, emit

logger = logging.getLogger(__name__)


def add_parser(subparsers, parents) -> None:
    parser = subparsers.add_parser("gen", parents=parents, help="Enumerate S(n,r)")
    parser.add_argument("n", type=int)
    parser.add_argument("r", type=int)
    parser.add_argument("--color-by", choices=[c.value for c in ColorBy], default=None)
    parser.add_argument("--map-file", type=Path, default=None, help="BooleanMap JSON")
    parser.add_argument("--weights", dest="weights_file", type=Path, default=None,
                        help="WeightFunction JSON; colours by its induced map")
    parser.set_defaults(handler=run)


def load_map(config: CommandConfig) -> Optional[BooleanMap]:
    if config.map_file is not None:
        data = json.loads(Path(config.map_file).read_text())
        # synth --emit documents wrap the map
        if isinstance(data, dict) and "map" in data:
            data = data["map"]
        return BooleanMapModel.model_validate(data).to_domain()
    if config.weights_file is not None:
        model = WeightFunctionModel.model_validate(json.loads(Path(config.weights_file).read_text()))
        wf = model.to_domain()
        violations = validate(wf)
        if violations:
            raise ValueError(f"Invalid weight function in {config.weights_file}: {violations}")
        return induced_map(wf)
    return None


def run(config: CommandConfig) -> int:
    shape = config.shape
    shape.require_enumerable()
    exporter = HasseExporter()

    if config.format is OutputFormat.TEXT:
        emit(exporter.export_text(shape), config.out)
        return EXIT_OK
    if config.format is OutputFormat.JSON:
        emit(exporter.export_json(shape), config.out)
        return EXIT_OK

    boolean_map = load_map(config)
    color_by = config.color_by
    if color_by is None:
        if boolean_map is not None:
            color_by = ColorBy.MAP
        elif shape.r < shape.n:
            color_by = ColorBy.REGIONS
        else:
            color_by = ColorBy.NONE

    emit(exporter.export_dot(shape, color_by, boolean_map), config.out)
    return EXIT_OK
