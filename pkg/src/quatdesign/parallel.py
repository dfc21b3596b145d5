"""Deterministic parallel map: ordered results regardless of thread count."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def default_threads() -> int:
    return max(1, os.cpu_count() or 1)


def pmap(fn, items, threads: int = 1) -> list:
    """Map fn over items; results in input order (exact arithmetic makes the
    outcome independent of scheduling)."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
