"""Deterministic block-parallel execution over index ranges.

Every kernel in this package computes each output element independently of
how the index space is blocked, so results are bit-identical for any worker
count; the pool only changes who computes which block.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

_ENV_THREADS = "ROADNET_THREADS"


def resolve_threads(threads: int | None = None) -> int:
    """Explicit argument wins, then ROADNET_THREADS, then CPU count."""
    if threads is None:
        env = os.environ.get(_ENV_THREADS)
        if env:
            threads = int(env)
        else:
            return os.cpu_count() or 1
    if threads < 1:
        raise ValueError(f"thread count must be >= 1, got {threads}")
    return threads


def block_ranges(n: int, blocks: int) -> list[tuple[int, int]]:
    """Split range(n) into at most `blocks` contiguous near-even pieces."""
    blocks = max(1, min(blocks, n)) if n else 1
    step, extra = divmod(n, blocks)
    ranges = []
    start = 0
    for i in range(blocks):
        stop = start + step + (1 if i < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges or [(0, 0)]


def run_blocks(fn, ranges, threads: int) -> None:
    """Run fn(start, stop) over ranges; fn writes disjoint output slices."""
    if threads <= 1 or len(ranges) <= 1:
        for a, b in ranges:
            fn(a, b)
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for _ in pool.map(lambda r: fn(*r), ranges):
            pass
