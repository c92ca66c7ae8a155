# core/tools/parallel.py
"""Ordered fan-out for independent strand / multidegree jobs."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_ordered(fn: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """Apply fn to every item; results come back in input order whatever the thread count."""
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    logger.debug(f"dispatching {len(items)} jobs on {threads} threads")
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
