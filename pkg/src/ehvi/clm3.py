"""Sweep-plane EHVI for exactly three objectives.

Points are processed in ascending third coordinate. A staircase over the
first two coordinates (keys strictly increasing, values strictly decreasing)
tracks the nondominated 2-D projections seen so far, together with the exact
Gaussian integral of its dominated cross-section. Between consecutive sweep
levels the dominated region is a prism: cross-section integral times the
psi difference along axis 3. Summing the slabs gives the dominated-region
integral; EHVI is the full-region integral minus that sum.

Each point is inserted once and removed at most once, so the staircase does
at most 2n ordered-map operations across the sweep: with a logarithmic map
that is the Theta(n log n) bound. The map here is a pair of parallel sorted
lists driven by bisect; Python lacks a stdlib balanced tree, and at
benchmark sizes the list splice is cheaper than any tree's constant factor.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .core import EhviResult, Front
from .errors import DimensionError, ReferenceBoundError, UnsupportedDimensionError
from .gaussian import GaussianBelief, full_region_integral, psi, psi_vec


@dataclass
class SweepState:
    """2-D staircase plus its running cross-section integral.

    keys are first coordinates (ascending), vals the matching second
    coordinates (strictly descending). The psi caches are parallel lists so
    the sweep never recomputes a transcendental. Confine one state to one
    sweep; it is mutated in place.
    """

    belief: GaussianBelief  # 2-D marginals of the candidate belief
    reference: tuple[float, float]
    keys: list[float] = field(default_factory=list)
    vals: list[float] = field(default_factory=list)
    running_integral: float = 0.0
    level: float = -float("inf")
    operations: int = 0  # inserts + removals, <= 2n over a whole sweep
    key_psi: list[float] = field(default_factory=list)
    val_psi: list[float] = field(default_factory=list)
    psi_r1: float = field(init=False)
    psi_r2: float = field(init=False)

    def __post_init__(self) -> None:
        if self.belief.m != 2 or len(self.reference) != 2:
            raise DimensionError("SweepState needs a 2-D belief and a 2-D reference")
        self.reference = (float(self.reference[0]), float(self.reference[1]))
        self.psi_r1 = psi(self.reference[0], self.belief.mean[0], self.belief.stddev[0])
        self.psi_r2 = psi(self.reference[1], self.belief.mean[1], self.belief.stddev[1])


def staircase_insert(state: SweepState, p: Sequence[float]) -> float:
    """Insert a 2-D point, returning the exact increase of the running integral.

    Points weakly dominated by the staircase leave the state unchanged and
    return 0. Otherwise the entries dominated by p (a contiguous run) are
    removed and the gained region is summed slab by slab from p, its
    surviving neighbors, and the removed entries.
    """
    y1, y2 = float(p[0]), float(p[1])
    r1, r2 = state.reference
    if not (y1 < r1 and y2 < r2):
        raise ReferenceBoundError(f"point ({y1}, {y2}) is not strictly inside the bound ({r1}, {r2})")
    b = state.belief
    return _insert(
        state,
        y1,
        y2,
        psi(y1, b.mean[0], b.stddev[0]),
        psi(y2, b.mean[1], b.stddev[1]),
    )


def _insert(state: SweepState, y1: float, y2: float, psi1: float, psi2: float) -> float:
    keys, vals = state.keys, state.vals
    kp, vp = state.key_psi, state.val_psi
    i = bisect_right(keys, y1)
    j = i - 1  # rightmost entry with key <= y1
    if j >= 0 and vals[j] <= y2:
        return 0.0  # weakly dominated (covers exact reinsertion)
    # Entries dominated by p form a contiguous run. It starts at the floor
    # itself when the floor shares p's key (its value must then be > y2).
    start = j if (j >= 0 and keys[j] == y1) else i
    end = start
    total = len(keys)
    while end < total and vals[end] >= y2:
        end += 1
    # Walk the gained region in vertical slabs: left edge starts at p, the
    # old coverage bottom starts at the surviving left neighbor (or r2).
    left_psi = psi1
    bottom_psi = vp[start - 1] if start >= 1 else state.psi_r2
    delta = 0.0
    for t in range(start, end):
        delta += (kp[t] - left_psi) * (bottom_psi - psi2)
        left_psi = kp[t]
        bottom_psi = vp[t]
    end_psi = kp[end] if end < total else state.psi_r1
    delta += (end_psi - left_psi) * (bottom_psi - psi2)
    if delta < 0.0:
        delta = 0.0  # underflow-scale rounding only; every factor is >= 0
    keys[start:end] = [y1]
    vals[start:end] = [y2]
    kp[start:end] = [psi1]
    vp[start:end] = [psi2]
    state.operations += 1 + (end - start)
    state.running_integral += delta
    return delta


def ehvi_clm3(front: Front, belief: GaussianBelief) -> EhviResult:
    """EHVI for m=3 by sweeping the third axis over a 2-D staircase.

    Slab contributions are emitted after inserting every point at a level,
    so tied levels add their points first and the zero-height slab between
    them contributes exactly 0. The reported box count is the number of
    ordered-map operations (inserts + removals).
    """
    if front.m != 3:
        raise UnsupportedDimensionError(f"the sweep backend needs m=3, got m={front.m}")
    if belief.m != 3:
        raise DimensionError(f"front has m=3 but belief has m={belief.m}")
    full = full_region_integral(front.frame, belief)
    if front.n == 0:
        return EhviResult(value=full, boxes=0)
    ref = front.reference
    pts = np.asarray(front.points, dtype=float)
    order = np.argsort(pts[:, 2], kind="stable")
    p1, p2, p3 = pts[order, 0], pts[order, 1], pts[order, 2]
    psi1 = psi_vec(p1, belief.mean[0], belief.stddev[0])
    psi2 = psi_vec(p2, belief.mean[1], belief.stddev[1])
    psi3 = psi_vec(p3, belief.mean[2], belief.stddev[2])
    psi_r3 = psi(ref[2], belief.mean[2], belief.stddev[2])

    state = SweepState(
        belief=GaussianBelief(belief.mean[:2], belief.stddev[:2]),
        reference=(ref[0], ref[1]),
    )
    dominated = 0.0
    prev_z: float | None = None
    prev_psi3 = 0.0
    for t in range(len(order)):
        z = float(p3[t])
        if prev_z is None or z > prev_z:
            if prev_z is not None:
                dominated += state.running_integral * (float(psi3[t]) - prev_psi3)
            prev_z = z
            prev_psi3 = float(psi3[t])
        _insert(state, float(p1[t]), float(p2[t]), float(psi1[t]), float(psi2[t]))
        state.level = z
    dominated += state.running_integral * (psi_r3 - prev_psi3)
    return EhviResult(value=max(full - dominated, 0.0), boxes=state.operations)
