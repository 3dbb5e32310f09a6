"""Exception hierarchy shared across the package."""


class GeePressError(Exception):
    """Base class for all package errors."""


class ParameterError(GeePressError, ValueError):
    """A correlation or model parameter is outside its admissible range."""


class InputError(GeePressError, ValueError):
    """Malformed data: schema violations, bad shapes, non-finite values."""


class NotPositiveDefiniteError(GeePressError):
    """A correlation matrix could not be repaired to positive definiteness."""

    def __init__(self, message, cluster=None):
        super().__init__(message)
        self.cluster = cluster


class RankDeficiencyError(GeePressError):
    """The information matrix sum(D' V^-1 D) is singular."""


class StructureInfeasibleError(GeePressError):
    """Too few within-cluster pairs to estimate the working correlation."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class DeletionSingularError(GeePressError):
    """(I - H_i) is singular, so cluster i dominates the fit."""

    def __init__(self, message, cluster=None):
        super().__init__(message)
        self.cluster = cluster


class UnconvergedFitError(GeePressError):
    """A criterion was requested on a fit that did not converge."""


class SelectionFailedError(GeePressError):
    """Every candidate working structure failed to converge."""


class RangeViolationError(GeePressError, ValueError):
    """A target correlation lies outside the attainable range for its margins."""

    def __init__(self, message, margins=None, bounds=None, target=None):
        super().__init__(message)
        self.margins = margins
        self.bounds = bounds
        self.target = target


class GenerationError(GeePressError):
    """Correlated outcome generation failed."""
