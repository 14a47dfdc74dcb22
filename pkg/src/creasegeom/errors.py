"""Exception and warning types shared across the library."""


class ParameterError(ValueError):
    """A spec or argument value is outside its admissible range."""


class ResolutionError(ParameterError):
    """Mesh resolution too low to produce a valid triangulation."""


class ClosureError(ParameterError):
    """A closed cross-section cannot be assembled; carries the gap size."""

    def __init__(self, message, gap=None):
        super().__init__(message)
        self.gap = gap


class MeshError(ValueError):
    """A mesh violates a structural invariant."""


class OrientationError(MeshError):
    """Triangle winding is inconsistent across an interior edge."""


class InputFormatError(ValueError):
    """An input file is not in a format this tool produces."""


class QuadratureError(ArithmeticError):
    """Adaptive integration hit its evaluation cap; carries the best estimate."""

    def __init__(self, message, best=None, error_estimate=None, evaluations=0):
        super().__init__(message)
        self.best = best
        self.error_estimate = error_estimate
        self.evaluations = evaluations


class ShallowRegimeWarning(UserWarning):
    """Inputs are outside the small-angle regime the closed forms assume."""
