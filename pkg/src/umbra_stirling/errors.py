"""Exception hierarchy shared by every module."""


class UmbraError(Exception):
    """Base class for all computational errors raised by this package."""


class TagMismatch(UmbraError, TypeError):
    """Two exact scalars from different coefficient fields were combined."""


class DivisionByZero(UmbraError, ZeroDivisionError):
    pass


class NonInvertibleConstantTerm(UmbraError, ZeroDivisionError):
    pass


class NonzeroConstantTerm(UmbraError, ValueError):
    pass


class RepeatedNodes(UmbraError, ValueError):
    """Divided differences need pairwise distinct nodes."""


class ZeroFactorial(UmbraError, ZeroDivisionError):
    """Some psi-factorial vanishes, so psi-binomials and exp_psi are undefined."""


class IndexOutOfRange(UmbraError, IndexError):
    pass


class NotConvergent(UmbraError, ValueError):
    pass


class InsufficientTerms(UmbraError, ValueError):
    pass


class SingularSystem(UmbraError, ArithmeticError):
    pass


class ConsistencyError(UmbraError, AssertionError):
    """Two independent routes to the same quantity disagreed."""
