"""Exception types shared across the package."""


class DomainError(ValueError):
    """An operation was applied outside its mathematical domain."""


class ValidationError(ValueError):
    """Structured input failed its consistency checks.

    Carries the full list of violations so callers can report all of
    them at once instead of fixing one field at a time.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(violations))
