"""Shared exception types.

Every domain error raised by this package derives from CbmfdError so the
command line layer can map them to a uniform exit code.
"""


class CbmfdError(Exception):
    """Base class for all errors raised by cbmfd on bad input or state."""


class DuplicatePoint(CbmfdError):
    """A point configuration contained the same projective point twice."""


class DegenerateProjection(CbmfdError):
    """Random projections kept hitting the configuration; retries exhausted."""


class OverlapError(CbmfdError):
    """Union of point sets requested on sets that share a point."""


class UncoveredPoint(CbmfdError):
    """A point lies on none of the supplied curve components."""


class AmbientDimError(CbmfdError):
    """Operation requires a different ambient projective dimension."""


class ConfigError(CbmfdError):
    """Experiment configuration violates a documented constraint."""


class CorruptRecord(CbmfdError):
    """A JSONL record file could not be parsed.

    line_number is 1-based and names the offending line.
    """

    def __init__(self, line_number: int, reason: str):
        super().__init__(f"line {line_number}: {reason}")
        self.line_number = line_number
        self.reason = reason


class LatticeMismatch(CbmfdError):
    """Classes from different lattices were combined."""


class NotUnimodular(CbmfdError):
    """A 2x2 integer matrix with determinant != 1 was passed to the
    lattice action."""


class ConeError(CbmfdError):
    """A divisor class lies outside the cone an operation requires."""


class CapError(CbmfdError):
    """Enumeration cap infeasibly large for the configured search budget."""


class EmptyIntersection(CbmfdError):
    """Hull linearity check requires the minimal classes to share a member."""


class UndefinedInterpolation(CbmfdError):
    """Interpolation threshold table queried outside its domain."""


class BadDegree(CbmfdError):
    """Preset formula asked for a hypersurface degree it does not cover."""
