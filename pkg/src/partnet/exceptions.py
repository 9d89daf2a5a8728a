"""Exception types raised by partnet."""


class PartnetError(Exception):
    """Base class for all partnet errors."""


class InvalidJump(PartnetError, ValueError):
    """A jump of order r cannot be applied to a partition."""


class InvalidInvariantJump(PartnetError, ValueError):
    """An invariant-initial-term jump would repeat or exceed an existing part."""


class DimensionMismatch(PartnetError, ValueError):
    pass


class LimitExceeded(PartnetError):
    """A materialized structure would exceed the configured budget."""

    def __init__(self, what, required, budget):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} entries, budget is {budget}")
