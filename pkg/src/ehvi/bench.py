"""Scaling benchmark: random fronts, timed backends, cross-checked values.

Fronts are drawn uniformly in the maximization box [0.1, 10]^m against a
reference at the origin, rejecting every draw that is comparable with an
already-accepted point. The candidate belief is fixed (mean -10 on every
negated axis, stddev 2.5) so runs are reproducible and comparable across
algorithms. Every (m, n, seed) cell is computed by all applicable backends
and the values are required to agree to 1e-10 relative before any timing is
reported.
"""

from __future__ import annotations

import gc
import math
import statistics
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Orientation, ProblemFrame, Vector, validate_front
from .dispatch import BACKENDS
from .errors import ParameterError, UnsupportedDimensionError
from .gaussian import GaussianBelief

GEN_LOW = 0.1
GEN_HIGH = 10.0
DEFAULT_MEAN = 10.0
DEFAULT_SIGMA = 2.5

DEFAULT_NS = (10, 50, 100, 150, 200, 250, 300)
SCALING_MS = tuple(range(3, 9))


@dataclass(frozen=True)
class BenchmarkRecord:
    """One timed backend call on one random front."""

    algorithm: str
    m: int
    n: int
    seed: int
    rep: int
    ehvi: float
    time_ns: int
    boxes: int


def generate_front(m: int, n: int, seed: int) -> list[Vector]:
    """Draw n mutually incomparable maximization points, uniform in [0.1, 10]^m.

    Rejection sampling: a draw is kept iff it neither weakly dominates nor is
    weakly dominated by any accepted point (in the maximize sense), which
    also rules out duplicates. Deterministic in (m, n, seed).
    """
    if m < 2:
        raise UnsupportedDimensionError(f"need at least 2 objectives, got m={m}")
    if n < 1:
        raise ParameterError(f"front size must be positive, got n={n}")
    rng = np.random.default_rng(seed)
    accepted = np.empty((0, m))
    while len(accepted) < n:
        v = rng.uniform(GEN_LOW, GEN_HIGH, m)
        if (v >= accepted).all(axis=1).any() or (v <= accepted).all(axis=1).any():
            continue
        accepted = np.vstack([accepted, v])
    return [tuple(row) for row in accepted]


def benchmark_frame(m: int) -> ProblemFrame:
    """Maximization against the origin, matching generate_front's domain."""
    return ProblemFrame(m=m, reference=(0.0,) * m, orientation=Orientation.MAXIMIZE)


def benchmark_belief(m: int, sigma_as_variance: bool = False) -> GaussianBelief:
    """Fixed candidate posterior used by every benchmark cell.

    Mean 10 on every maximized objective (-10 internally), spread 2.5 read
    as a standard deviation; pass sigma_as_variance=True to read it as a
    variance (stddev sqrt(2.5)) instead.
    """
    sd = math.sqrt(DEFAULT_SIGMA) if sigma_as_variance else DEFAULT_SIGMA
    return GaussianBelief(mean=(-DEFAULT_MEAN,) * m, stddev=(sd,) * m)


def run_benchmark(
    ms: Sequence[int],
    ns: Sequence[int],
    seeds: int,
    reps: int,
    algorithms: Sequence[str],
    sigma_as_variance: bool = False,
) -> list[BenchmarkRecord]:
    """Time every applicable (algorithm, m, n, seed) cell reps times.

    The sweep backend only handles m=3 and is silently skipped elsewhere.
    Each cell gets one untimed warm-up call per algorithm, then reps timed
    calls. All algorithms must agree on each cell's value to 1e-10 relative;
    disagreement aborts the run rather than reporting timings for wrong
    answers.
    """
    if seeds < 1:
        raise ParameterError(f"seeds must be positive, got {seeds}")
    if reps < 1:
        raise ParameterError(f"reps must be positive, got {reps}")
    for name in algorithms:
        if name not in BACKENDS:
            raise ParameterError(f"unknown algorithm {name!r}, expected one of {sorted(BACKENDS)}")
    records: list[BenchmarkRecord] = []
    for m in ms:
        frame = benchmark_frame(m)
        belief = benchmark_belief(m, sigma_as_variance)
        applicable = [a for a in algorithms if a != "clm3" or m == 3]
        if not applicable:
            continue
        for n in ns:
            for seed in range(seeds):
                front = validate_front(frame, generate_front(m, n, seed))
                values: dict[str, float] = {}
                for name in applicable:
                    backend = BACKENDS[name]
                    backend(front, belief)  # warm-up, untimed
                    # pause the cyclic collector while timing (as timeit
                    # does) so allocation debt from unrelated code does not
                    # bill a random rep; nothing here creates cycles
                    gc_was_enabled = gc.isenabled()
                    gc.collect()
                    gc.disable()
                    try:
                        for rep in range(reps):
                            start = time.perf_counter_ns()
                            result = backend(front, belief)
                            elapsed = time.perf_counter_ns() - start
                            records.append(
                                BenchmarkRecord(
                                    algorithm=name,
                                    m=m,
                                    n=n,
                                    seed=seed,
                                    rep=rep,
                                    ehvi=result.value,
                                    time_ns=elapsed,
                                    boxes=result.boxes,
                                )
                            )
                    finally:
                        if gc_was_enabled:
                            gc.enable()
                    values[name] = result.value
                first_name, first = next(iter(values.items()))
                for name, value in values.items():
                    if not math.isclose(value, first, rel_tol=1e-10, abs_tol=1e-300):
                        raise RuntimeError(
                            f"backend disagreement at m={m} n={n} seed={seed}: "
                            f"{first_name}={first!r} vs {name}={value!r}"
                        )
    records.sort(key=lambda r: (r.m, r.n, r.seed, r.algorithm, r.rep))
    return records


def summarize(records: Sequence[BenchmarkRecord]) -> list[dict[str, object]]:
    """Per (m, n, algorithm) aggregates of the timed calls, in sorted order."""
    cells: dict[tuple[int, int, str], list[BenchmarkRecord]] = {}
    for r in records:
        cells.setdefault((r.m, r.n, r.algorithm), []).append(r)
    out: list[dict[str, object]] = []
    for (m, n, algorithm) in sorted(cells):
        group = cells[(m, n, algorithm)]
        times = [r.time_ns for r in group]
        out.append(
            {
                "m": m,
                "n": n,
                "algorithm": algorithm,
                "calls": len(group),
                "mean_time_ns": statistics.fmean(times),
                "std_time_ns": statistics.stdev(times) if len(times) > 1 else 0.0,
                "mean_boxes": statistics.fmean(r.boxes for r in group),
                "max_boxes": max(r.boxes for r in group),
            }
        )
    return out
