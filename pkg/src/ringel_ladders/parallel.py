"""Deterministic range partitioning over a process pool.

Each worker gets one contiguous slice of ``[0, total)`` and returns a
partial result; callers merge by exact (integer) addition, so the answer
does not depend on how the range was cut or scheduled.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, TypeVar

T = TypeVar("T")

BATCH = 1 << 14


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    if parts < 1:
        raise ValueError("need at least one part")
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def batches(start: int, stop: int, size: int = BATCH):
    for lo in range(start, stop, size):
        yield lo, min(lo + size, stop)


def map_ranges(fn: Callable[..., T], total: int, workers: int, *args) -> list[T]:
    """Call ``fn(*args, start, stop)`` on ``workers`` slices, results in slice order."""
    if workers < 1:
        raise ValueError("workers must be >= 1")
    ranges = split_range(total, workers)
    if workers == 1:
        return [fn(*args, lo, hi) for lo, hi in ranges]
    procs = min(workers, os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=procs) as pool:
        futures = [pool.submit(fn, *args, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]
