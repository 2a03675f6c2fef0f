"""Exception taxonomy shared across the package.

The CLI maps these onto process exit codes, so keep the hierarchy flat and
purpose-specific rather than reusing bare ValueError everywhere.
"""


class EhviError(Exception):
    """Base class for all package errors."""


class DimensionError(EhviError, ValueError):
    """Mismatched vector/box/belief lengths."""


class ParameterError(EhviError, ValueError):
    """Invalid numeric parameter (non-positive stddev, bad box bounds, ...)."""


class InvalidFrontError(EhviError, ValueError):
    """Candidate front violates mutual nondominance or contains bad points."""


class ReferenceBoundError(EhviError, ValueError):
    """A point is not strictly inside the reference bound."""


class UnsupportedDimensionError(EhviError, ValueError):
    """Objective count outside what the requested operation supports."""


class GpFitError(EhviError, RuntimeError):
    """Training covariance not positive definite even after jitter."""


class CandidatesExhaustedError(EhviError, RuntimeError):
    """No unexplored candidates remain for the BO loop to query."""
