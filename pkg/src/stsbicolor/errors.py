"""Exception hierarchy."""


class STSError(Exception):
    """Base class for all errors raised by this package."""


class OrderNotAdmissible(STSError, ValueError):
    """The requested order does not satisfy the construction's congruence."""


class SizeMismatch(STSError, ValueError):
    """Two inputs that must agree in size do not."""


class InvalidFactorization(STSError, ValueError):
    """A 1-factorization failed validation."""


class ParityError(STSError, ValueError):
    """A block that needs a perfect matching has odd size."""


class PreconditionViolated(STSError, ValueError):
    """The arithmetic hypothesis of a construction does not hold."""


class ConstructionUnverified(STSError):
    """A construction ran but its output failed the independent checker."""


class InstanceTooLarge(STSError):
    """The instance exceeds the size for which a decision procedure is run."""


class VerificationFailure(STSError):
    """A certificate or chain step did not re-verify."""
