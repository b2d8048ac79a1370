"""Custom exceptions for the sturmian library."""


class SturmianError(Exception):
    """Base exception for all sturmian errors."""
    def __init__(self, message: str, *args, **kwargs):
        self.message = message
        super().__init__(message, *args)


class ArithmeticDomainError(SturmianError):
    """Value outside the supported quadratic-irrational domain."""
    pass


class ConvergentError(SturmianError):
    """Integer expected to be a convergent denominator is not one."""
    pass


class PreconditionError(SturmianError):
    """Operation called outside its documented input range."""
    pass


class ConfigurationError(SturmianError):
    """Unparsable command-line literal or inconsistent run configuration."""
    pass


class BudgetExceededError(SturmianError):
    """A verification sweep ran out of its letter budget.

    The rows that completed before the budget ran out are kept on the
    exception so callers can still print a partial report.
    """
    def __init__(self, message: str, partial=None, *args, **kwargs):
        self.partial = list(partial or [])
        super().__init__(message, *args, **kwargs)
