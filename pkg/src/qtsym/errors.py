"""Exception hierarchy shared by the whole package.

Errors that a caller can provoke with bad input derive from UserInputError;
the command line maps those to exit code 1.  Anything else escaping to the
CLI is treated as an internal fault and maps to exit code 2.
"""


class QtSymError(Exception):
    """Base class for all package errors."""


class UserInputError(QtSymError):
    """Bad input that the caller can fix (wrong sizes, bad syntax, ...)."""


class CoefficientError(UserInputError):
    """Arithmetic fault in Q(q,t): division by zero or evaluation at a pole."""


class PartitionError(UserInputError):
    """A sequence that is not a partition, or incompatible partition sizes."""


class TableauError(UserInputError):
    """An invalid filling, or an operation outside its defined domain."""


class BasisError(UserInputError):
    """Unknown basis, duplicate registration, or no conversion route."""


class SingularMatrixError(QtSymError):
    """A basis-change matrix that was expected to be invertible is not."""


class ScalarProductError(QtSymError):
    """A degenerate scalar product surfaced where orthogonalization needs it."""


class ExpressionError(UserInputError):
    """Syntax or evaluation error in the little expression language."""
