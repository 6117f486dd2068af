"""Exception types shared across the package."""


class LapsimError(Exception):
    """Base class for all package errors."""


class ShapeError(LapsimError, ValueError):
    """Matrix/vector dimensions do not match the operation."""


class SingularMatrixError(LapsimError, ValueError):
    """A nonsingular matrix was required but det = 0."""


class DomainError(LapsimError, ValueError):
    """Input outside the mathematical domain of the operation."""


class FeasibilityError(LapsimError, RuntimeError):
    """Computation exceeds a configured size cap.

    ``required`` carries the size that would have been needed.
    """

    def __init__(self, message, required=None):
        super().__init__(message)
        self.required = required


class InternalInconsistencyError(LapsimError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
