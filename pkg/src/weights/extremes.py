"""
Extremal and random weight functions
"""
import logging
import math
import random
from fractions import Fraction

from ..lattice import Shape
from .functions import is_valid
from .types import WeightFunction

logger = logging.getLogger(__name__)

# Random values are drawn on the grid 1/RANDOM_DENOMINATOR
RANDOM_DENOMINATOR = 1000


def minimizer(shape: Shape) -> WeightFunction:
    """
    Weight function with exactly 2^(n-1) non-negative nonempty sums.

    Every tilde index gets n-r, every bar index -1 except the deepest,
    which gets (n-r)(1-r)-1; the total is 0.
    """
    shape.require_negatives()
    m, r = shape.m, shape.r
    neg = [-1] * (m - 1) + [m * (1 - r) - 1]
    return WeightFunction(shape=shape, pos_values=(m,) * r, neg_values=tuple(neg))


def maximizer(shape: Shape) -> WeightFunction:
    """Weight function with exactly 2^n - 2^(n-r) non-negative nonempty sums"""
    shape.require_negatives()
    return WeightFunction(
        shape=shape,
        pos_values=(Fraction(1),) * shape.r,
        neg_values=(Fraction(-1, shape.m),) * shape.m,
    )


def interpolate(low: WeightFunction, high: WeightFunction, t: Fraction) -> WeightFunction:
    """
    (1-t)*low + t*high, valid whenever both ends are valid and 0 <= t <= 1.
    """
    t = Fraction(t)
    return WeightFunction(
        shape=low.shape,
        pos_values=tuple((1 - t) * a + t * b for a, b in zip(low.pos_values, high.pos_values)),
        neg_values=tuple((1 - t) * a + t * b for a, b in zip(low.neg_values, high.neg_values)),
    )


def sample_random(shape: Shape, seed: int) -> WeightFunction:
    """
    Deterministic random valid weight function for a seed.

    Non-negative values are drawn from [0, scale] and negative ones from
    [-1, -1/1000] on a 1/1000 grid, then sorted into monotone order; draws
    are rejected until the total is non-negative. scale grows with the
    ratio (n-r)/r so acceptance stays likely for every shape.
    """
    rng = random.Random(seed)
    d = RANDOM_DENOMINATOR
    scale = max(1, math.ceil(shape.m / shape.r))
    attempts = 0
    while True:
        attempts += 1
        pos = sorted(Fraction(rng.randint(0, scale * d), d) for _ in range(shape.r))
        neg = sorted((Fraction(-rng.randint(1, d), d) for _ in range(shape.m)), reverse=True)
        wf = WeightFunction(shape=shape, pos_values=tuple(pos), neg_values=tuple(neg))
        if is_valid(wf):
            if attempts > 1:
                logger.debug(f"sample_random{shape} seed={seed} accepted after {attempts} draws")
            return wf
