"""Exception hierarchy.

Every error raised deliberately by the package derives from EisZetaError, so
callers (notably the CLI) can tell usage/schema problems from bugs.
"""


class EisZetaError(Exception):
    pass


class NonPrimeModulus(EisZetaError, ValueError):
    pass


class NotPIntegral(EisZetaError, ValueError):
    pass


class OrderExceeded(EisZetaError, IndexError):
    pass


class NonUnitSeries(EisZetaError, ZeroDivisionError):
    pass


class CapExceeded(EisZetaError, RuntimeError):
    pass


class NonRealResult(EisZetaError, ArithmeticError):
    pass


class UnsupportedDegree(EisZetaError, ValueError):
    pass


class NoLeadingTerm(EisZetaError, ValueError):
    pass


class NoMinimumDistance(EisZetaError, ValueError):
    pass


class SchemaError(EisZetaError, ValueError):
    pass


class InvariantViolation(EisZetaError, ValueError):
    pass


class SingularSystem(EisZetaError, ArithmeticError):
    pass


class InexactDivision(EisZetaError, ArithmeticError):
    pass


class ExclusionMismatch(EisZetaError, ArithmeticError):
    pass


class NonConvergence(EisZetaError, ArithmeticError):
    pass


class ExcludedPrime(EisZetaError, ValueError):
    pass


class UnitCheckFailed(EisZetaError, ArithmeticError):
    pass
