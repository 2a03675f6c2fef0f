"""Independent verification oracles: Monte-Carlo EHVI and 2-D quadrature.

These deliberately avoid the closed-form fast paths. The Monte-Carlo
estimator samples the candidate belief and averages per-draw hypervolume
improvements; the quadrature oracle integrates the product of normal cdfs
numerically over the grid decomposition's boxes, so the only shared
ingredient with the exact backends is the region shape, never the psi
closed form. Verification ladders: sampling checks the closed form, the
quadrature checks psi, and the grid decomposition's region is itself
checked by brute-force dominance oracles in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .core import Front
from .errors import DimensionError, ParameterError, UnsupportedDimensionError
from .gaussian import GaussianBelief, std_normal_cdf
from .grid import grid_decompose
from .wfg import signed_box_terms

_MC_CHUNK = 100_000  # fixed so a seed reproduces bit-exactly for a given sample count
_TERM_BLOCK = 1 << 24  # max elements in the draws x terms x axes product


@dataclass(frozen=True)
class McEstimate:
    """Sample mean, its standard error, and the sampling parameters."""

    mean: float
    std_error: float
    samples: int
    seed: int


def ehvi_monte_carlo(front: Front, belief: GaussianBelief, samples: int, seed: int) -> McEstimate:
    """Estimate EHVI as the sample mean of per-draw hypervolume improvements.

    Draws use numpy's default PCG64 generator through
    Generator.standard_normal (ziggurat transform) in fixed-size chunks, so a
    (seed, samples) pair reproduces bit-exactly on a platform.

    Per draw, the improvement is evaluated exactly: draws weakly dominated by
    the front or outside the reference bound contribute exactly 0.0; for the
    rest, the dominated-region indicator expands into signed boxes
    (wfg.signed_box_terms), so the improvement is the bound-box volume minus
    the signed sum of clipped box volumes. This is algebraically identical to
    core.hypervolume_improvement per draw but vectorizes over draws.
    """
    if samples < 2:
        raise ParameterError(f"need at least 2 samples, got {samples}")
    if belief.m != front.m:
        raise DimensionError(f"front has m={front.m} but belief has m={belief.m}")
    m = front.m
    rng = np.random.default_rng(seed)
    ref = np.asarray(front.reference, dtype=float)
    pts = np.asarray(front.points, dtype=float).reshape(front.n, m)
    terms = signed_box_terms(front.points, front.reference) if front.n else []
    lowers = np.asarray([t.box.lower for t in terms], dtype=float).reshape(len(terms), m)
    signs = np.asarray([float(t.sign) for t in terms])
    mu = np.asarray(belief.mean)
    sd = np.asarray(belief.stddev)

    values = np.empty(samples)
    done = 0
    while done < samples:
        k = min(_MC_CHUNK, samples - done)
        draws = mu + sd * rng.standard_normal((k, m))
        out = np.zeros(k)
        alive = (draws < ref).all(axis=1)
        if front.n:
            dominated = (draws[:, None, :] >= pts[None, :, :]).all(axis=2).any(axis=1)
            alive &= ~dominated
        if alive.any():
            sub = draws[alive]
            improvement = np.prod(ref - sub, axis=1)
            if len(terms):
                step = max(1, _TERM_BLOCK // (len(terms) * m))
                covered = np.empty(len(sub))
                for s in range(0, len(sub), step):
                    block = sub[s : s + step]
                    clipped = np.maximum(block[:, None, :], lowers[None, :, :])
                    covered[s : s + len(block)] = np.prod(ref - clipped, axis=2) @ signs
                improvement = improvement - covered
            out[alive] = np.maximum(improvement, 0.0)
        values[done : done + k] = out
        done += k
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / math.sqrt(samples))
    return McEstimate(mean=mean, std_error=std_error, samples=samples, seed=int(seed))


def ehvi_quadrature_2d(front: Front, belief: GaussianBelief, tolerance: float) -> float:
    """Deterministic EHVI for m=2 by adaptive quadrature over the grid boxes.

    Each box integral is a product of two 1-D integrals of the normal cdf
    (the integrand is separable), each evaluated adaptively to a quarter of
    the requested tolerance; the total error is bounded by roughly the
    tolerance times the box count.
    """
    if front.m != 2:
        raise UnsupportedDimensionError(f"quadrature oracle needs m=2, got m={front.m}")
    if not (tolerance > 0.0):
        raise ParameterError(f"tolerance must be positive, got {tolerance}")
    if belief.m != 2:
        raise DimensionError(f"front has m=2 but belief has m={belief.m}")
    eps = tolerance / 4.0
    total = 0.0
    for box in grid_decompose(front).boxes:
        term = 1.0
        for j in range(2):
            mu, sd = belief.mean[j], belief.stddev[j]
            val, _ = quad(
                lambda t, mu=mu, sd=sd: std_normal_cdf((t - mu) / sd),
                box.lower[j],
                box.upper[j],
                epsabs=eps,
                epsrel=eps,
                limit=200,
            )
            term *= val
        total += term
    return total
