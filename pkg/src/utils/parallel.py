"""
Worker pool helper
Runs independent jobs concurrently and returns results in input order
"""

import os
from concurrent import futures
from typing import Callable, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(requested: Optional[int]) -> int:
    """0 or None means the available parallelism"""
    if not requested or requested <= 0:
        return os.cpu_count() or 1
    return int(requested)


def map_ordered(
    fn: Callable[[T], R],
    items: Sequence[T],
    max_workers: Optional[int] = 1,
    use_processes: bool = False,
) -> List[R]:
    """Apply fn to every item; result k belongs to items[k] whatever the scheduling"""
    items = list(items)
    workers = min(resolve_workers(max_workers), len(items))
    if workers <= 1:
        return [fn(item) for item in items]

    executor_cls = futures.ProcessPoolExecutor if use_processes else futures.ThreadPoolExecutor
    results: List[Optional[R]] = [None] * len(items)
    with executor_cls(max_workers=workers) as executor:
        pending = {executor.submit(fn, item): index for index, item in enumerate(items)}
        for future in futures.as_completed(pending):
            results[pending[future]] = future.result()
    return results
