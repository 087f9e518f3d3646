"""Exception hierarchy shared by every module."""


class HomAltError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


# Input problems: malformed files, unknown names, bad CLI usage.

class InputError(HomAltError):
    exit_code = 2


class ParseError(InputError):
    """Document text is not valid JSON."""


class SchemaError(InputError):
    """Document does not follow the schema (missing, extra or duplicate fields)."""


class RangeError(InputError):
    """An index lies outside the basis."""


class RationalError(InputError):
    """A value does not parse as an exact rational."""


class UnknownFixture(InputError):
    pass


class UnknownIdentity(InputError):
    pass


class UsageError(InputError):
    pass


# Structural problems of the data itself.

class AlgebraError(HomAltError):
    exit_code = 2


class GradingError(AlgebraError):
    """A tensor or map does not respect the even/odd decomposition."""


class DimensionMismatch(AlgebraError):
    pass


class IndexOutOfRange(AlgebraError):
    pass


class SingularMatrix(AlgebraError):
    exit_code = 1


# A construction was asked for on data that does not satisfy its hypotheses.

class PreconditionFailed(HomAltError):
    exit_code = 1


class NotAMorphism(PreconditionFailed):
    pass


class NotMultiplicative(PreconditionFailed):
    pass


class NotAlternative(PreconditionFailed):
    pass


class NotAnIsometry(PreconditionFailed):
    pass


class NotPseudoEuclidean(PreconditionFailed):
    pass


class NotSymplectic(PreconditionFailed):
    pass


class NotADerivation(PreconditionFailed):
    pass


class NotAntisymmetric(PreconditionFailed):
    pass


class NotRotaBaxter(PreconditionFailed):
    pass


class WrongWeight(PreconditionFailed):
    pass


class NotPreAlt(PreconditionFailed):
    """The dot product of a post-alternative structure is not identically zero."""
