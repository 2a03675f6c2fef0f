"""Coordinate-grid decomposition of the nondominated region.

The n front points induce an (n+1)-cell partition per axis (with -inf and the
reference coordinate as sentinels). A grid cell belongs to the nondominated
region exactly when its lower corner is not weakly dominated by any front
point, and that test reduces to one lookup in the H-array: H, indexed by the
lower-bound ranks of the first m-1 axes, holds the minimal m-th coordinate of
any front point weakly preceding that rank tuple. EHVI is then the sum of
closed-form box integrals over all qualifying cells.

The EHVI entry point enumerates every cell (that is the algorithm: Theta(n^m)
cells, O(m) work each), vectorized and chunked so memory stays bounded;
grid_decompose materializes the boxes for the disjoint-cover oracle and other
verification work.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .core import EhviResult, Front, HyperBox
from .errors import DimensionError
from .gaussian import GaussianBelief, psi_vec

# Largest cell block materialized at once by ehvi_grid (elements, not bytes).
_CHUNK = 1 << 22


class RegionKind(enum.Enum):
    NONDOMINATED = "nondominated_region"
    DOMINATED = "dominated_region"


@dataclass(frozen=True)
class Decomposition:
    """Disjoint half-open boxes covering the declared region."""

    boxes: tuple[HyperBox, ...]
    kind: RegionKind


@dataclass(frozen=True)
class GridStructure:
    """Per-axis sorted bounds (n+2 entries: -inf, coords, reference) plus the H-array."""

    axes: tuple[np.ndarray, ...]
    h_array: np.ndarray  # shape (n+1,)*(m-1); +inf where no front point precedes

    @property
    def m(self) -> int:
        return len(self.axes)

    @property
    def n(self) -> int:
        return len(self.axes[0]) - 2


def build_grid(front: Front) -> GridStructure:
    """Sort the per-axis coordinates and accumulate the H-array.

    Points are applied in descending m-th coordinate; each point lowers H on
    the contiguous rank block it weakly precedes (rank 0, lower bound -inf,
    is preceded by nothing and stays +inf).
    """
    m, n = front.m, front.n
    pts = np.asarray(front.points, dtype=float).reshape(n, m)
    axes = tuple(
        np.concatenate(([-np.inf], np.sort(pts[:, j]), [front.reference[j]])) for j in range(m)
    )
    h = np.full((n + 1,) * (m - 1), np.inf)
    for i in np.argsort(-pts[:, m - 1], kind="stable"):
        a = pts[i]
        block = tuple(
            slice(int(np.searchsorted(axes[j], a[j], side="left")), None) for j in range(m - 1)
        )
        np.minimum(h[block], a[m - 1], out=h[block])
    return GridStructure(axes=axes, h_array=h)


def grid_decompose(front: Front) -> Decomposition:
    """Materialize every nonempty nondominated grid cell as a HyperBox.

    The union of the emitted boxes is exactly the nondominated region bounded
    by the reference point. Intended for verification and moderate n^m; the
    EHVI entry point streams instead of materializing.
    """
    g = build_grid(front)
    m, n = front.m, front.n
    boxes = []
    for idx in itertools.product(range(n + 1), repeat=m):
        if not g.axes[m - 1][idx[m - 1]] < g.h_array[idx[:-1]]:
            continue  # lower corner weakly dominated
        lower = tuple(float(g.axes[j][idx[j]]) for j in range(m))
        upper = tuple(float(g.axes[j][idx[j] + 1]) for j in range(m))
        if any(lo == up for lo, up in zip(lower, upper)):
            continue  # zero width, zero measure
        boxes.append(HyperBox(lower, upper))
    return Decomposition(boxes=tuple(boxes), kind=RegionKind.NONDOMINATED)


def ehvi_grid(front: Front, belief: GaussianBelief) -> EhviResult:
    """EHVI as the sum of box integrals over all nondominated grid cells.

    Every one of the (n+1)^m cells is visited. The per-cell integrand is a
    product of per-axis psi differences, so whole cell blocks are evaluated
    as outer products; blocks larger than _CHUNK elements are split along
    leading axes. The reported box count is the number of emitted cells
    (nondominated lower corner, positive width on every axis), matching
    grid_decompose.
    """
    if belief.m != front.m:
        raise DimensionError(f"front has m={front.m} but belief has m={belief.m}")
    g = build_grid(front)
    m, n = front.m, front.n
    k = n + 1
    diffs = []
    widths = []
    for j in range(m):
        p = psi_vec(g.axes[j], belief.mean[j], belief.stddev[j])
        diffs.append(np.maximum(p[1:] - p[:-1], 0.0))
        widths.append(g.axes[j][1:] > g.axes[j][:-1])
    lower_m = g.axes[m - 1][:k]  # cell lower bounds along the last axis

    lead = 0
    block = k**m
    while block > _CHUNK and lead < m - 1:
        block //= k
        lead += 1
    # Outer products over the trailing axes are shared by every leading prefix.
    value_tail = diffs[m - 1]
    width_tail = widths[m - 1]
    for j in range(m - 2, lead - 1, -1):
        value_tail = np.multiply.outer(diffs[j], value_tail)
        width_tail = np.logical_and.outer(widths[j], width_tail)

    total = 0.0
    count = 0
    for prefix in itertools.product(range(k), repeat=lead):
        scale = 1.0
        prefix_wide = True
        for j, i in enumerate(prefix):
            scale *= diffs[j][i]
            prefix_wide = prefix_wide and bool(widths[j][i])
        hs = np.asarray(g.h_array[prefix])
        mask = lower_m < hs[..., None]
        if scale > 0.0:
            total += scale * float((value_tail * mask).sum())
        if prefix_wide:
            count += int((mask & width_tail).sum())
    return EhviResult(value=total, boxes=count)
