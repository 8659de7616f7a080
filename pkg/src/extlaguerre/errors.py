"""Exception hierarchy.

Validation problems derive from ``ValueError`` so callers that only care
about bad input can catch that; numeric failures derive from
``ArithmeticError``.
"""


class ExtLaguerreError(Exception):
    """Base class for all errors raised by this package."""


class IdenticallyZero(ExtLaguerreError, ValueError):
    pass


class ZeroPolynomial(IdenticallyZero):
    pass


class NotNegativeAnywhere(ExtLaguerreError, ValueError):
    pass


class NotMonic(ExtLaguerreError, ValueError):
    pass


class IndexOutOfRange(ExtLaguerreError, IndexError):
    pass


class GeneratorError(ExtLaguerreError, ValueError):
    """g fails one of the admissibility hypotheses."""


class NonPositiveLeading(GeneratorError):
    pass


class OddCoefficientPresent(GeneratorError):
    pass


class NegativeCoefficient(GeneratorError):
    pass


class AllRootsReal(GeneratorError):
    pass


class NotAdmissible(GeneratorError):
    pass


class NoConvergence(ExtLaguerreError, ArithmeticError):
    pass


class CertificationFailed(ExtLaguerreError, ArithmeticError):
    pass


class JetTooShort(ExtLaguerreError, ValueError):
    pass


class InternalInconsistency(ExtLaguerreError, RuntimeError):
    """The LP criterion and the Sturm oracle disagree. Always a bug."""
