"""Optional process parallelism, capped by the ``COHA_THREADS`` variable."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("COHA_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn, items) -> list:
    """``list(map(fn, items))``, spread over worker processes when allowed.

    Results come back in input order, so output never depends on scheduling.
    """
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
