"""Exception hierarchy shared by every module in the package."""


class ModeqError(Exception):
    """Base class for all package errors."""


class DomainError(ModeqError, ValueError):
    """An argument lies outside the domain of the function."""


class GridRangeError(DomainError):
    """A q value lies outside the range validated for an identity."""


class DivisionByZero(ModeqError, ZeroDivisionError):
    pass


class PrecisionMismatch(ModeqError, ValueError):
    """Operands were computed under different precision contexts."""


class StepTooSmall(ModeqError, ArithmeticError):
    """A finite-difference step produced a difference below the noise floor."""


class SignUndefined(ModeqError, ValueError):
    """The Russell sign (-1)**((n1 + n2)/8) needs 8 | n1 + n2."""


class IdealMembershipFailure(ModeqError):
    """Multivariate division left a nonzero remainder."""

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder
