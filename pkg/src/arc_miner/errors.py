"""Exception hierarchy shared across the package."""


class ArcMinerError(Exception):
    """Base class for all errors raised by arc-miner."""


class InputError(ArcMinerError):
    """Bad user-supplied input: files, tables, parameters."""


class CaptionParseError(InputError):
    """A caption track could not be parsed; carries the offending element index."""

    def __init__(self, message, element_index=None):
        super().__init__(message)
        self.element_index = element_index


class LexiconError(InputError):
    """A polarity or shifter table failed validation."""


class ParameterError(InputError):
    """An operation was called with out-of-contract parameters."""


class DataError(InputError):
    """Numeric input violated a precondition (non-finite values etc.)."""


class InvariantError(ArcMinerError):
    """An internal invariant was violated; indicates a bug, not bad input."""
