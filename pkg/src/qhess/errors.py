"""Exception hierarchy shared by every qhess module."""


class QHessError(Exception):
    """Base class for all domain errors raised by qhess."""


class DomainError(QHessError):
    """Input outside the mathematical domain of an operation (CLI exit code 3)."""


class NotHyperhermitian(DomainError):
    pass


class NonRealResult(DomainError):
    pass


class PairingFailure(DomainError):
    """Eigenvalues of the complex embedding did not come in equal pairs."""


class NoConvergence(DomainError):
    pass


class ConeViolation(DomainError):
    pass


class DimensionMismatch(DomainError):
    pass


class NotReal(DomainError):
    """A form is not fixed by the quaternionic structure map."""


class NotSkew(DomainError):
    pass


class WrongDegree(DomainError):
    pass


class IndexOutOfRange(DomainError):
    pass


class SingularEvaluation(DomainError):
    """A field with a radial singularity was evaluated at its singular point."""


class NotTopDegree(WrongDegree):
    pass


class RadialSymmetryViolation(DomainError):
    pass


class NotCompactlyContained(DomainError):
    pass


class BadExponent(DomainError):
    pass
