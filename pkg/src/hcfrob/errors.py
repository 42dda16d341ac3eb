"""Exception hierarchy.

ValidationError covers bad input or unusable preconditions (CLI exit 1);
InvariantViolation covers conditions that can only arise from an internal
bug and are never tolerated (CLI exit 2).
"""


class HcError(Exception):
    pass


class ValidationError(HcError):
    pass


class InvariantViolation(HcError):
    pass


# ring construction / arithmetic

class NotPrime(ValidationError):
    pass


class EvenCharacteristic(ValidationError):
    """p = 2 is rejected up front.

    In even characteristic the truncation-kernel basis built here only
    bounds denominators up to a factor of 2 (2*M' integral, not M'), so the
    construction is not offered; a dedicated even-characteristic variant of
    the algorithm is required.
    """

    def __init__(self, msg=None):
        super().__init__(
            msg
            or "p = 2 not supported: the basis change only guarantees "
            "integrality of 2*M' in even characteristic"
        )


class NoIrreducibleFound(ValidationError):
    pass


class ContextMismatch(ValidationError):
    pass


class NotAUnit(ValidationError):
    pass


# polynomial / series layer

class NonUnitLeadingCoeff(ValidationError):
    pass


class NotCoprime(ValidationError):
    pass


class NonUnitConstantTerm(ValidationError):
    pass


class EmptyWindow(ValidationError):
    pass


# curve validation

class NotMonic(ValidationError):
    pass


class WrongDegree(ValidationError):
    pass


class SingularReduction(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class TooLarge(ValidationError):
    pass


class ParseError(ValidationError):
    pass


# precision management

class InsufficientPrecision(ValidationError):
    pass


# never-expected internal failures

class PivotNotUnit(InvariantViolation):
    pass


class DenominatorBoundViolation(InvariantViolation):
    pass


class IntegralityViolation(InvariantViolation):
    pass


class WeilBoundViolation(InvariantViolation):
    pass


class FunctionalEquationViolation(InvariantViolation):
    pass
