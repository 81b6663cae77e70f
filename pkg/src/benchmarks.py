"""Benchmark module: time the Hochster sweep across worker counts."""

import logging
import time
from typing import Dict, List, Sequence

from src.algebra.homology import graded_betti
from src.algebra.monomials import MonomialIdeal

logger = logging.getLogger(__name__)


def benchmark_sweep(ideal: MonomialIdeal, jobs: int, iterations: int = 3, characteristic: int = 0) -> float:
    """Median wall time of graded_betti in milliseconds."""
    times = []
    for _ in range(iterations):
        start = time.perf_counter()
        graded_betti(ideal, characteristic, jobs)
        times.append((time.perf_counter() - start) * 1000)
    return sorted(times)[len(times) // 2]


def run_benchmark(
    ideal: MonomialIdeal,
    jobs_list: Sequence[int],
    iterations: int = 3,
    characteristic: int = 0,
) -> List[Dict[str, float]]:
    """One row per worker count, with speedup relative to the first entry."""
    logger.info(f"Benchmarking Hochster sweep of {ideal} for jobs={list(jobs_list)}")
    rows = []
    baseline = None
    for jobs in jobs_list:
        median = benchmark_sweep(ideal, jobs, iterations, characteristic)
        baseline = baseline or median
        rows.append({"jobs": jobs, "median_ms": median, "speedup": baseline / median if median else 1.0})
        logger.info(f"jobs={jobs}: {median:.1f} ms")
    return rows
