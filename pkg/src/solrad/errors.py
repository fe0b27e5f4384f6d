"""Exception types shared across the package."""


class SolradError(Exception):
    """Base class for all package errors."""


class DomainError(SolradError, ValueError):
    """An argument lies outside its documented domain."""


class RasterParseError(SolradError):
    """A raster file violates the grid format.

    Carries the offending path and 1-based line number when known.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}: "
        if line is not None:
            prefix += f"line {line}: "
        super().__init__(prefix + message)


class OutOfBoundsError(SolradError):
    """A geographic point falls outside a grid extent."""


class LowSunError(SolradError):
    """Zenith angle at or beyond the configured cutoff; reflectance undefined."""


class EmptyEnvelopeError(SolradError):
    """No valid samples available to build a reflectance envelope."""


class MissingSlotError(SolradError):
    """Queried an hour slot that holds no samples."""


class DegenerateFitError(SolradError):
    """Regression input has zero regressor variance."""


class PairingError(SolradError):
    """Paired series have mismatched lengths."""


class IngestError(SolradError):
    """Station CSV is structurally unreadable (columns, header)."""


class EmptyDatasetError(SolradError):
    """No records left to build a design matrix from."""


class DegenerateDesignError(SolradError):
    """Design matrix is rank-deficient."""


class DivergenceError(SolradError):
    """Training loss became non-finite."""

    def __init__(self, message, last_finite_epoch=None):
        self.last_finite_epoch = last_finite_epoch
        super().__init__(message)


class NoViableCandidateError(SolradError):
    """Every search candidate failed; the score table is attached."""

    def __init__(self, message, table=None):
        self.table = table
        super().__init__(message)


class ShapeError(SolradError):
    """Array shape incompatible with a trained model or paired input."""


class UndefinedMetricError(SolradError):
    """Metric undefined for this input (zero variance or zero mean)."""


class ConfigError(SolradError):
    """Pipeline configuration is invalid."""


class ModelFormatError(SolradError):
    """Persisted model container is corrupt or has the wrong format tag."""


class StageError(SolradError):
    """A CLI stage could not produce its primary artifact."""
