"""Exception hierarchy shared by the library and the CLI."""


class SeriesFactError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2


class UnsupportedError(SeriesFactError):
    """Operation not available for the requested ring or input."""

    exit_code = 3


class FactorizationOverflow(SeriesFactError):
    """Integer too large for the desk-scale factorization backend."""

    exit_code = 4


class RingMismatchError(SeriesFactError):
    pass


class NotInvertibleError(SeriesFactError):
    pass


class IndeterminateError(SeriesFactError):
    """A finite window cannot certify the requested property."""


class MemoLimitError(SeriesFactError):
    pass


class SplitError(SeriesFactError):
    pass


class ParseError(SeriesFactError):
    def __init__(self, message, pos):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos
        self.reason = message
