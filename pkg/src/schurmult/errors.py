class AlgebraError(Exception):
    """Base class for every error raised by schurmult."""


class NotAssociative(AlgebraError):
    pass


class NotAnIdeal(AlgebraError):
    pass


class NotCentral(AlgebraError):
    pass


class NotInDerived(AlgebraError):
    pass


class NotNilpotent(AlgebraError):
    pass


class PreconditionFailed(AlgebraError):
    pass


class BadParameter(AlgebraError):
    pass


class UnknownName(AlgebraError):
    pass


class SizeLimit(AlgebraError):
    pass
