"""Backend selection shared by the CLI and the BO loop."""

from __future__ import annotations

from .clm3 import ehvi_clm3
from .core import EhviResult, Front
from .errors import ParameterError, UnsupportedDimensionError
from .gaussian import GaussianBelief
from .grid import ehvi_grid
from .wfg import ehvi_wfg

BACKENDS = {
    "grid": ehvi_grid,
    "wfg": ehvi_wfg,
    "clm3": ehvi_clm3,
}

ALGORITHMS = tuple(BACKENDS) + ("auto",)


def resolve_algorithm(name: str, m: int) -> str:
    """Resolve an algorithm selector against the objective count.

    "auto" picks the sweep for m=3 and the recursive backend otherwise;
    explicitly requesting the sweep away from m=3 is an error.
    """
    if name not in ALGORITHMS:
        raise ParameterError(f"unknown algorithm {name!r}, expected one of {ALGORITHMS}")
    if name == "auto":
        return "clm3" if m == 3 else "wfg"
    if name == "clm3" and m != 3:
        raise UnsupportedDimensionError(f"algorithm clm3 needs m=3, got m={m}")
    return name


def compute_ehvi(front: Front, belief: GaussianBelief, algorithm: str = "auto") -> EhviResult:
    """Compute EHVI with the named (or auto-resolved) backend."""
    return BACKENDS[resolve_algorithm(algorithm, front.m)](front, belief)
