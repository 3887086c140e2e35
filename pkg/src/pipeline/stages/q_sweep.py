"""
Stage: verify the synthesized map for every admissible count
"""
from typing import List, Optional, Tuple

from ...lattice import Shape
from ...synthesis import SynthesisReport, verify_synthesis
from ..pool import ItemCallback, run_items


def _verify_one(item: Tuple[int, int, int]) -> SynthesisReport:
    n, r, q = item
    return verify_synthesis(Shape(n, r), q)


class QSweepStage:
    def __init__(self, workers: int = 1):
        self.workers = workers

    def execute(self, shape: Shape, on_item: Optional[ItemCallback] = None) -> List[SynthesisReport]:
        shape.require_negatives()
        items = [(shape.n, shape.r, q) for q in range(shape.gamma, shape.eta + 1)]
        return run_items(_verify_one, items, workers=self.workers, on_item=on_item)
