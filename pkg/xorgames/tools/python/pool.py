""" Ordered parallel map over worker processes """

from __future__ import annotations

import logging
from collections import abc
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar


logger = logging.getLogger(__name__)


def parallel_map(function: abc.Callable[[T], R], items: abc.Iterable[T], *, workers: int = 1) -> list[R]:
    """ Apply `function` to every item, possibly in a pool of processes

    Results always come back in the order of `items`, whatever the number of workers:
    reductions over the result list are therefore independent of the degree of parallelism.

    Example:
        def evaluate_chunk(indices: range) -> list[float]:
            ...

        results = parallel_map(evaluate_chunk, chunked_ranges(10_000, 16), workers=4)

    Note: with workers > 1, `function` and the items must be picklable,
    i.e. `function` must be defined at module level.
    """
    items = list(items)

    # Single worker: no pool, no pickling
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]

    logger.debug('Mapping %d tasks over %d worker processes', len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(function, items))


def chunked_ranges(total: int, chunks: int) -> list[range]:
    """ Split range(total) into at most `chunks` contiguous, nearly equal ranges """
    chunks = max(1, min(chunks, total))
    bounds = [total * i // chunks for i in range(chunks + 1)]
    return [range(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if hi > lo]


T = TypeVar('T')
R = TypeVar('R')
