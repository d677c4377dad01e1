class LogMajorError(Exception):
    """Base class for every error raised by logmajor."""


class InvalidMatrix(LogMajorError, ValueError):
    """Raise when an input is not a finite square complex matrix."""


class DimensionMismatch(LogMajorError, ValueError):
    """Raise when two operators do not live in the same algebra M_n."""


class NonConvergence(LogMajorError):
    """Raise when Jacobi sweeps exceed the iteration cap."""


class NotHermitian(LogMajorError, ValueError):
    """Raise when an operator expected to be self-adjoint is not."""


class NotPositive(LogMajorError, ValueError):
    """Raise when an operator expected to be positive semidefinite is not."""


class NotPSDBlock(LogMajorError, ValueError):
    """Raise when the 2x2 block operator [[a, x], [x*, b]] is not positive."""


class NotContraction(LogMajorError, ValueError):
    """Raise when an operator expected to be a contraction has norm above 1."""


class DomainError(LogMajorError, ValueError):
    """Raise when a transformed spectrum leaves the domain of the logarithm."""


class ScalarFunctionError(LogMajorError, ValueError):
    """Raise when a scalar function does not satisfy its family hypotheses."""


class InvalidStatementParams(LogMajorError, ValueError):
    """Raise when a statement is evaluated outside its parameter range."""


class OracleMismatch(LogMajorError):
    """Raise when an independent reference path disagrees structurally with the calculus."""


class ConfigError(LogMajorError):
    """Raise when the suite configuration is invalid or cannot be read."""


class ParseError(LogMajorError):
    """Raise when a witness or matrix record cannot be parsed.

    Args:
        message (str): what went wrong
        line (int): 1-based line number of the offending token
        column (int): 1-based column number of the offending token
        path (str): file being parsed, when known
    """

    def __init__(self, message, *, line, column=1, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}{line}:{column}: {message}")


# errors that fail a single trial instead of aborting a sweep
TRIAL_ERRORS = (LogMajorError, ArithmeticError, ValueError)
