"""Exception types shared across the package."""


class DomainError(ValueError):
    """An integer argument lies outside the domain of an operation."""


class AdmissibilityError(ValueError):
    """The parameters do not give a Heegaard diagram (wrong curve count)."""


class AmbiguousShiftError(ValueError):
    """No unique covering shift exists; ``candidates`` lists every valid s."""

    def __init__(self, message, candidates):
        super().__init__(message)
        self.candidates = tuple(candidates)


class RecurrenceError(RuntimeError):
    """The torus-knot recurrence produced a negative arc count."""
