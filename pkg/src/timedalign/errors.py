"""Exception hierarchy shared by the library and the CLI."""


class TimedAlignError(Exception):
    """Base class for all library errors."""


class ContractError(TimedAlignError, ValueError):
    """An operation was called outside its precondition."""


class DataError(TimedAlignError, ValueError):
    """An input document (model JSON, log CSV, inline trace) is malformed."""


class UntimedMismatchError(ContractError):
    """The activity labels of an observed trace do not follow the model."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class CapacityError(TimedAlignError, ValueError):
    """A brute-force routine was asked to handle an instance that is too large."""
