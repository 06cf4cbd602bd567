"""Exception types raised across the package."""


class InvalidArgument(ValueError):
    pass


class NotDivisible(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


class DegenerateDistribution(ValueError):
    """The distribution has zero variance (a single letter class)."""


class SizeLimitExceeded(ValueError):
    pass
