"""Exception hierarchy shared by every module in the package."""


class VotingGameError(ValueError):
    """Base class for all errors raised by recpower."""


class NonSimple(VotingGameError):
    """The winning table violates unanimity (empty set wins or grand coalition loses)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NonMonotone(VotingGameError):
    """A winning coalition has a losing superset; ``witness`` is the pair (S, T)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SizeLimit(VotingGameError):
    pass


class IndexOutOfRange(VotingGameError):
    pass


class InvalidPermutation(VotingGameError):
    pass


class SamePlayer(VotingGameError):
    pass


class NonSimpleResult(VotingGameError):
    """A transformation produced a table that is not a simple voting game."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InternalInvariant(RuntimeError):
    """A condition that cannot fail for valid inputs did fail."""


class SignMismatch(VotingGameError):
    pass


class UnsupportedCombination(VotingGameError):
    pass


class ParseError(VotingGameError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
