# Order-preserving process-pool map; results never depend on the worker count.
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_jobs() -> int:
    return os.cpu_count() or 1


def chunked(items, n_chunks):
    items = list(items)
    n_chunks = max(1, min(n_chunks, len(items)))
    size = -(-len(items) // n_chunks) if items else 1
    return [items[i : i + size] for i in range(0, len(items), size)]


def ordered_map(fn, arg_lists, jobs: int = 1):
    """``[fn(*args) for args in arg_lists]``, optionally fanned out to processes."""
    arg_lists = list(arg_lists)
    if jobs <= 1 or len(arg_lists) <= 1:
        return [fn(*args) for args in arg_lists]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, *args) for args in arg_lists]
        return [f.result() for f in futures]
