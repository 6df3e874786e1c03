"""Exception hierarchy shared by all modules."""


class StringGenusError(Exception):
    """Base class for every error raised by this package."""


class NotAUnit(StringGenusError, ZeroDivisionError):
    pass


class InvalidWeight(StringGenusError, ValueError):
    pass


class InvalidSeries(StringGenusError, ValueError):
    pass


class InsufficientPrecision(StringGenusError, ValueError):
    pass


class InternalError(StringGenusError, RuntimeError):
    """A mathematical guarantee was violated; results cannot be trusted."""


class WeightMismatch(StringGenusError, ValueError):
    pass


class InconsistentBound(StringGenusError, ValueError):
    pass


class NonIntegral(StringGenusError, ValueError):
    pass


class NonIntegralPairing(NonIntegral):
    pass
