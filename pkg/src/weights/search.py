"""
Best-effort search for a weight function with a prescribed count

A miss is not evidence that no such function exists.
"""
import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from ..config import get_settings
from ..errors import OutOfRangeError
from ..lattice import Shape
from ..rationals import format_rational
from .extremes import interpolate, maximizer, minimizer, sample_random
from .functions import alpha, is_valid
from .types import WeightFunction

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    shape: Shape
    q: int
    found: Optional[WeightFunction]
    attempts: int
    closest: WeightFunction
    closest_alpha: int

    @property
    def success(self) -> bool:
        return self.found is not None

    def as_dict(self) -> Dict:
        return {
            "n": self.shape.n,
            "r": self.shape.r,
            "q": self.q,
            "found": self.success,
            "attempts": self.attempts,
            "closest_alpha": self.closest_alpha,
            "weights": str(self.closest),
        }


def _perturb(wf: WeightFunction, rng: random.Random) -> Optional[WeightFunction]:
    """Nudge one value by a random factor and restore monotone order"""
    values = list(wf.pos_values) + list(wf.neg_values)
    i = rng.randrange(len(values))
    factor = Fraction(rng.randint(50, 150), 100)
    if values[i] == 0:
        values[i] = Fraction(rng.randint(1, 100), 100)
    else:
        values[i] *= factor
    candidate = WeightFunction.from_values(values)
    if candidate.shape != wf.shape or not is_valid(candidate):
        return None
    return candidate


def search_realizing(
    shape: Shape,
    q: int,
    budget: Optional[int] = None,
    seed: int = 0,
) -> SearchResult:
    """
    Look for a valid weight function with exactly q non-negative nonempty sums.

    Tries the two extremal functions, then alternates random points on the
    segment between them, fresh random samples and local perturbations of
    the closest candidate so far, until ``budget`` candidates are spent.
    """
    shape.require_negatives()
    if not shape.gamma <= q <= shape.eta:
        raise OutOfRangeError(
            f"q = {q} lies outside [{shape.gamma}, {shape.eta}] for shape {shape}"
        )
    if budget is None:
        budget = get_settings().sweep.search_budget

    rng = random.Random(seed)
    low, high = minimizer(shape), maximizer(shape)
    best = low
    best_alpha = alpha(low)
    attempts = 0

    def consider(candidate: WeightFunction) -> bool:
        nonlocal best, best_alpha, attempts
        attempts += 1
        count = alpha(candidate)
        if abs(count - q) < abs(best_alpha - q):
            best, best_alpha = candidate, count
        return count == q

    for seed_candidate in (low, high):
        if consider(seed_candidate):
            return SearchResult(shape, q, seed_candidate, attempts, seed_candidate, q)

    while attempts < budget:
        step = attempts % 3
        if step == 0:
            candidate = interpolate(low, high, Fraction(rng.randint(1, 999), 1000))
        elif step == 1:
            candidate = sample_random(shape, rng.randrange(1 << 30))
        else:
            perturbed = _perturb(best, rng)
            if perturbed is None:
                attempts += 1
                continue
            candidate = perturbed
        if consider(candidate):
            logger.info(f"Found weights for q={q} on {shape} after {attempts} attempts")
            return SearchResult(shape, q, candidate, attempts, candidate, q)

    logger.warning(
        f"No weight function with alpha={q} on {shape} within {budget} attempts; "
        f"closest alpha {best_alpha} at {best} (total {format_rational(best.total)})"
    )
    return SearchResult(shape, q, None, attempts, best, best_alpha)
