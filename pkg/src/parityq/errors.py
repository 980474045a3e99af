"""Exception types shared across the package."""


class QSeriesError(Exception):
    """Base class for all errors raised by this package."""


class OutOfPrecisionError(QSeriesError):
    """A coefficient at or above the truncation order was requested."""


class ZeroFactorError(QSeriesError):
    """A Pochhammer product contains a factor that is identically zero."""


class NonConvergentError(QSeriesError):
    """A summation's valuation bound failed to clear the truncation order
    within the iteration cap (usually a sign of a mis-specified identity)."""


class PreconditionViolatedError(QSeriesError):
    """A transformation checker was called with parameters outside the
    region where the identity makes formal sense."""

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


class UnknownIdentityError(QSeriesError):
    """An identity id was not found in the registry."""
