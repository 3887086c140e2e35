"""
Hasse Diagram Exporter
Renders S(n,r) as text, JSON or a Graphviz digraph
"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Optional

from jinja2 import Environment, FileSystemLoader

from ..errors import ShapeMismatchError
from ..lattice import Region, Shape, lattice_table, region_codes
from ..maps import BooleanMap
from ..models import ColorBy, LatticeModel

logger = logging.getLogger(__name__)

REGION_COLORS: Dict[Region, str] = {
    Region.S1_PLUS: "black",
    Region.S1_PM: "violet",
    Region.S1_MINUS: "red",
    Region.S2_PLUS: "blue",
    Region.S2_PM: "brown",
    Region.S2_MINUS: "green",
}

MAP_COLORS = {True: "green", False: "red"}

PLAIN_COLOR = "gray30"


def node_id(pos: int, neg: int) -> str:
    """Graphviz node id: the two bit masks in decimal"""
    return f"{pos}:{neg}"


class HasseExporter:
    """
    Exports whole lattices.

    DOT output goes through the hasse.dot.j2 template in templates/.
    """

    def __init__(self, templates_dir: Optional[Path] = None):
        if templates_dir is None:
            templates_dir = Path(__file__).parent.parent.parent / "templates"
        self.jinja_env = Environment(
            loader=FileSystemLoader(str(templates_dir)),
            autoescape=False,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

    def export_text(self, shape: Shape) -> str:
        """One element per line, canonical order"""
        return "".join(f"{w}\n" for w in lattice_table(shape).elements())

    def export_json(self, shape: Shape) -> str:
        model = LatticeModel.from_shape(shape)
        return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"

    def export_dot(
        self,
        shape: Shape,
        color_by: ColorBy = ColorBy.REGIONS,
        boolean_map: Optional[BooleanMap] = None,
    ) -> str:
        colors = self._colors(shape, ColorBy(color_by), boolean_map)
        table = lattice_table(shape)
        ids = [node_id(int(p), int(q)) for p, q in zip(table.pos_masks, table.neg_masks)]

        levels: List[List[str]] = [[] for _ in range(table.max_rank + 1)]
        for i, rank in enumerate(table.ranks):
            levels[int(rank)].append(ids[i])

        nodes = [
            {"id": ids[i], "label": str(table.element(i)), "color": colors[i]}
            for i in range(len(table))
        ]
        edges = sorted(
            (int(s), int(d)) for s, d in zip(table.edge_src, table.edge_dst)
        )

        template = self.jinja_env.get_template("hasse.dot.j2")
        dot = template.render(
            n=shape.n,
            r=shape.r,
            levels=levels,
            nodes=nodes,
            edges=[(ids[s], ids[d]) for s, d in edges],
        )
        logger.debug(f"Rendered {len(nodes)} nodes and {len(edges)} edges for {shape}")
        return dot

    def _colors(self, shape: Shape, color_by: ColorBy, boolean_map: Optional[BooleanMap]) -> List[str]:
        if color_by is ColorBy.MAP:
            if boolean_map is None:
                raise ValueError("Colouring by map needs a boolean map")
            if boolean_map.shape != shape:
                raise ShapeMismatchError(f"Map is on {boolean_map.shape}, diagram is {shape}")
            return [MAP_COLORS[bool(v)] for v in boolean_map.values]

        if color_by is ColorBy.REGIONS:
            regions = list(Region)
            return [REGION_COLORS[regions[int(c)]] for c in region_codes(shape)]

        return [PLAIN_COLOR] * shape.size
