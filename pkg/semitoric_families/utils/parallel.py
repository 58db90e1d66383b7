# Thread pool for grid work; results always come back in tile order.
from concurrent.futures import ThreadPoolExecutor
import logging
import os
from typing import Callable, Iterable, List, TypeVar

from semitoric_families.utils.constants import THREADS_ENV_VAR

_LOGGER = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "1")
    try:
        count = int(raw)
    except ValueError:
        _LOGGER.warning(f"ignoring {THREADS_ENV_VAR}={raw!r}, using one thread")
        return 1
    return max(1, count)


def map_tiles(fn: Callable[[T], R], tiles: Iterable[T]) -> List[R]:
    """Apply fn to every tile, in parallel when more than one thread is configured"""
    tiles = list(tiles)
    threads = min(thread_count(), len(tiles)) if tiles else 1
    if threads <= 1:
        return [fn(tile) for tile in tiles]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tiles))
