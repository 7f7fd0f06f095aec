"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: ValidationError -> 1,
BoundViolationError -> 2, NumericalError -> 3.
"""


class ValidationError(ValueError):
    """Input violates a documented precondition or invariant."""


class BoundViolationError(RuntimeError):
    """An inequality that should hold analytically failed beyond tolerance."""


class NumericalError(RuntimeError):
    """A solver, truncation, or sampler could not certify its result."""
