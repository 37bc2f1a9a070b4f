"""Exception hierarchy shared by all modules."""


class DyckError(Exception):
    """Base class for every error raised by this package."""


class UnknownSymbol(DyckError):
    def __init__(self, position: int, symbol: str):
        super().__init__(f"unknown symbol {symbol!r} at position {position}")
        self.position = position
        self.symbol = symbol


class ResourceBound(DyckError):
    """An enumeration would exceed the configured cap."""


class NotMember(DyckError):
    """A word that should lie in the two-sided language does not."""

    def __init__(self, message: str, residual=None):
        super().__init__(message)
        self.residual = residual


class NotTwoSided(NotMember):
    pass


class EmptyWord(DyckError):
    pass


class NotSeparable(DyckError):
    """The word lies in the two-sided language, so no separating quotient exists."""


class NotFound(DyckError):
    pass


class VerificationFailure(DyckError):
    """A self-check on a constructed object failed."""


class FormatError(DyckError):
    """Malformed quotient or certificate file."""
