"""Exception hierarchy shared by every module of the package."""


class SemigroupError(ValueError):
    """Base class for invalid input to a semigroup computation."""


class EmptyGenerators(SemigroupError):
    pass


class NonCoprime(SemigroupError):
    """The generators have a common divisor, so the complement is infinite."""


class FullSemigroup(SemigroupError):
    """The operation is undefined for S = N."""


class NotMaximalEmbeddingDimension(SemigroupError):
    pass


class NotArf(SemigroupError):
    pass


class InvalidSequence(SemigroupError):
    """A multiplicity sequence that no Arf semigroup realizes."""


class NotMember(SemigroupError):
    pass


class ZeroElement(SemigroupError):
    pass


class ImproperIdeal(SemigroupError):
    pass


class NotOversemigroup(SemigroupError):
    pass


class ZeroOperator(SemigroupError):
    pass


class OperatorSyntaxError(SemigroupError):
    pass


class InvariantViolation(RuntimeError):
    """Two independent computations of the same quantity disagree."""
