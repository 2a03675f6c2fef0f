"""Standard normal kernels and the closed-form Gaussian box integral.

The whole exact-EHVI machinery reduces to one primitive:

    psi(a, mu, sigma) = integral of Phi((y - mu)/sigma) dy over (-inf, a]
                      = (a - mu) * Phi(t) + sigma * phi(t),   t = (a - mu)/sigma

The probability that a Gaussian candidate improves on every coordinate of a
box corner factorizes over objectives, so the integral of that probability
over a half-open box is a product of per-axis psi differences (box_integral).
psi(-inf) is exactly 0, which lets boxes open to -inf pass through with no
special casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.special import ndtr

from .core import HyperBox, ProblemFrame, Vector, as_vector
from .errors import DimensionError, ParameterError

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_INV_SQRT_2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class GaussianBelief:
    """Independent per-objective Gaussian posterior, internal minimization convention."""

    mean: Vector
    stddev: Vector

    def __post_init__(self) -> None:
        object.__setattr__(self, "mean", as_vector(self.mean))
        object.__setattr__(self, "stddev", as_vector(self.stddev))
        if len(self.mean) != len(self.stddev):
            raise DimensionError(
                f"belief has {len(self.mean)} means but {len(self.stddev)} stddevs"
            )
        if not all(math.isfinite(x) for x in self.mean):
            raise ParameterError(f"belief means must be finite, got {self.mean}")
        for s in self.stddev:
            if not (s > 0.0) or not math.isfinite(s):
                raise ParameterError(f"belief stddevs must be positive and finite, got {self.stddev}")

    @property
    def m(self) -> int:
        return len(self.mean)


def std_normal_pdf(x: float) -> float:
    """Standard normal density phi(x)."""
    return math.exp(-0.5 * x * x) * _INV_SQRT_2PI


def std_normal_cdf(x: float) -> float:
    """Standard normal cdf Phi(x), computed from erfc for tail accuracy."""
    return 0.5 * math.erfc(-x * _INV_SQRT_2)


def psi(a: float, mu: float, sigma: float) -> float:
    """Integral of Phi((y - mu)/sigma) dy over (-inf, a]; psi(-inf) = 0 exactly."""
    if not (sigma > 0.0) or not math.isfinite(sigma):
        raise ParameterError(f"sigma must be positive and finite, got {sigma}")
    if a == -math.inf:
        return 0.0
    d = a - mu
    t = d / sigma
    val = d * std_normal_cdf(t) + sigma * std_normal_pdf(t)
    # The analytic value is nonnegative; clamp only underflow-scale rounding.
    return val if val > 0.0 else 0.0


def psi_vec(a: np.ndarray, mu: float, sigma: float) -> np.ndarray:
    """Vectorized psi over an array of upper bounds; -inf entries map to 0."""
    a = np.asarray(a, dtype=float)
    finite = np.isfinite(a)
    d = np.where(finite, a - mu, 0.0)
    t = d / sigma
    out = d * ndtr(t) + sigma * (np.exp(-0.5 * t * t) * _INV_SQRT_2PI)
    return np.where(finite, np.maximum(out, 0.0), 0.0)


def box_integral(box: HyperBox, belief: GaussianBelief) -> float:
    """Closed-form integral of the dominance probability over a half-open box.

    Equals the product over axes of psi(upper) - psi(lower); zero as soon as
    any axis has zero width, and never exceeds the box's Lebesgue volume.
    """
    if box.m != belief.m:
        raise DimensionError(f"box has m={box.m} but belief has m={belief.m}")
    out = 1.0
    for lo, up, mu, sd in zip(box.lower, box.upper, belief.mean, belief.stddev):
        f = psi(up, mu, sd) - psi(lo, mu, sd)
        if f <= 0.0:
            return 0.0
        out *= f
    return out


def full_region_integral(frame: ProblemFrame, belief: GaussianBelief) -> float:
    """Integral over the whole region bounded by the reference point.

    This is box_integral of box(-inf, r), i.e. the product of psi(r_j).
    """
    if frame.m != belief.m:
        raise DimensionError(f"frame has m={frame.m} but belief has m={belief.m}")
    out = 1.0
    for r, mu, sd in zip(frame.internal_reference, belief.mean, belief.stddev):
        out *= psi(r, mu, sd)
    return out
