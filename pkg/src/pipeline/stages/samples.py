"""
Stage: random weight functions must land in [gamma, eta]
"""
import random
from typing import Optional, Tuple

from ...census import RealMultiset, count_nonneg_subsets_mitm
from ...lattice import Shape
from ...weights import alpha, sample_random
from ..pool import ItemCallback, run_items
from ..types import SampleOutcome, SampleReport


def _check_sample(item: Tuple[int, int, int]) -> SampleOutcome:
    n, r, seed = item
    shape = Shape(n, r)
    wf = sample_random(shape, seed)
    count = alpha(wf)
    census_count = count_nonneg_subsets_mitm(RealMultiset.of(wf.values))
    if r < n:
        in_range = shape.gamma <= count <= shape.eta
    else:
        in_range = count == shape.size - 1
    return SampleOutcome(seed=seed, weights=str(wf), alpha=count, census=census_count, in_range=in_range)


class SamplesStage:
    def __init__(self, workers: int = 1):
        self.workers = workers

    def execute(
        self,
        shape: Shape,
        samples: int,
        seed: int,
        on_item: Optional[ItemCallback] = None,
    ) -> SampleReport:
        """Per-sample seeds are drawn from ``seed``, so a run is reproducible"""
        rng = random.Random(seed)
        items = [(shape.n, shape.r, rng.randrange(1 << 31)) for _ in range(samples)]
        outcomes = run_items(_check_sample, items, workers=self.workers, on_item=on_item)
        return SampleReport(shape=shape, seed=seed, outcomes=outcomes)
