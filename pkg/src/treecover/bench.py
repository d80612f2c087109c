"""Timing harness for the decomposer.

The exact emitted-edge count is the real check of linear work; the fitted
log-log slope of time against m is reported for information only.
"""

from __future__ import annotations

import gc
import math
import statistics
import time
from dataclasses import dataclass
from typing import Iterable

from .decompose import decompose
from .graph import complete_edge_count

MIN_TRIALS = 3
SLOPE_RANGE = (0.8, 1.3)


@dataclass(frozen=True)
class BenchRecord:
    n: int
    m: int
    emitted_edges: int
    distinct_edges: int
    wall_time: int  # ns, minimum over trials
    trials: int

    @property
    def exact(self) -> bool:
        return self.emitted_edges == self.m == self.distinct_edges


def bench_one(n: int, trials: int) -> BenchRecord:
    if trials < MIN_TRIALS:
        raise ValueError(f"need at least {MIN_TRIALS} trials, got {trials}")
    best = None
    gc_was_enabled = gc.isenabled()
    for _ in range(trials):
        gc.disable()
        try:
            start = time.perf_counter_ns()
            cover, trace = decompose(n)
            elapsed = time.perf_counter_ns() - start
        finally:
            if gc_was_enabled:
                gc.enable()
        best = elapsed if best is None else min(best, elapsed)
    distinct = len({e for tree in cover.trees for e in tree})
    return BenchRecord(n, complete_edge_count(n), trace.emitted_edges, distinct, best, trials)


def run_bench(ns: Iterable[int], trials: int) -> list[BenchRecord]:
    return [bench_one(n, trials) for n in ns]


def loglog_slope(records: list[BenchRecord]) -> float:
    """Least-squares slope of log(wall_time) against log(m)."""
    if len(records) < 2:
        raise ValueError("need at least two records to fit a slope")
    xs = [math.log(r.m) for r in records]
    ys = [math.log(max(r.wall_time, 1)) for r in records]
    return statistics.linear_regression(xs, ys).slope
