class EmptyBoxError(ValueError):
    """Base class for domain errors raised by emptybox."""


class BudgetExceededError(EmptyBoxError):
    """An exhaustive search would exceed its configured work budget."""


class ConstructionFailedError(EmptyBoxError):
    """A randomized construction ran out of attempts."""

    def __init__(self, message, attempts, last_witness=None):
        super().__init__(message)
        self.attempts = attempts
        self.last_witness = last_witness
