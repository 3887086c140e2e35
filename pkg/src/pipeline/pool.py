"""
Fan-out helper for independent verification items
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

ItemCallback = Callable[[int, int], None]


def run_items(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    on_item: Optional[ItemCallback] = None,
) -> List[R]:
    """
    Apply func to every item, in a process pool when workers > 1.

    Results come back in input order either way; ``func`` must be a
    module-level function so it can be pickled.
    """
    items = list(items)
    total = len(items)
    results: List[R] = []

    if workers <= 1 or total <= 1:
        for item in items:
            results.append(func(item))
            if on_item:
                on_item(len(results), total)
        return results

    logger.debug(f"Running {total} items on {workers} worker processes")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for result in pool.map(func, items):
            results.append(result)
            if on_item:
                on_item(len(results), total)
    return results
