"""Exception hierarchy shared by the exact and numeric layers."""


class DeszetaError(Exception):
    """Base class for all library errors."""


class DivisionByNonUnit(DeszetaError, ZeroDivisionError):
    pass


class InternalInvariantViolation(DeszetaError, AssertionError):
    pass


class EvaluationError(DeszetaError):
    """Base for numeric evaluator failures (CLI exit code 3)."""


class PoleOfGamma(EvaluationError):
    pass


class PoleAtOne(EvaluationError):
    pass


class NotInConvergenceRegion(EvaluationError):
    pass


class SingularLocus(EvaluationError):
    pass


class UnsupportedInstance(EvaluationError):
    pass


class CancellationLoss(EvaluationError):
    pass


class QuadratureNotConverged(EvaluationError):
    pass


class MissingTableEntry(DeszetaError, KeyError):
    pass


class UnknownSuite(DeszetaError, ValueError):
    pass
