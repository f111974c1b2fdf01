"""Exception hierarchy.

Every error raised for a bad input or an unreachable request derives from
:class:`PermstatError`.  The CLI maps :class:`DomainError` subclasses to exit
code 2.
"""


class PermstatError(ValueError):
    pass


class DomainError(PermstatError):
    """A well-formed request the mathematics refuses."""


class NotAPermutation(PermstatError):
    pass


class EmptyInput(PermstatError):
    pass


class ZeroRank(PermstatError):
    pass


class RankMismatch(PermstatError):
    pass


class DuplicateEntries(PermstatError):
    pass


class RankCapExceeded(DomainError):
    pass


class KOutOfRange(DomainError):
    pass


class MissingParameterK(PermstatError):
    pass


class BadParams(PermstatError):
    pass


class NotARealizableVector(DomainError):
    pass


class KExceedsN(DomainError):
    pass


class InexactDivision(DomainError):
    pass


class OutOfRegime(DomainError):
    pass


class RankTooSmall(DomainError):
    pass


class NoClosedForm(DomainError):
    pass


class NotAchievable(DomainError):
    pass


class OutOfTable(DomainError):
    pass


class MOutOfRange(DomainError):
    pass


class UnknownPattern(PermstatError):
    pass
