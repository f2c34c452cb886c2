"""Exception hierarchy."""


class MapError(ValueError):
    """Base class for every error raised by sdmaps."""


class InvalidPermutation(MapError):
    pass


class NotInvolution(MapError):
    pass


class Disconnected(MapError):
    pass


class NotSphere(MapError):
    pass


class InvalidMorphism(MapError):
    pass


class NotAutomorphism(InvalidMorphism):
    pass


class BadParameter(MapError):
    pass


class InvalidCorner(MapError):
    pass


class UnknownFixture(MapError):
    pass


class FixtureSelfCheckFailed(MapError):
    pass


class NotACycle(MapError):
    pass


class NotSimple(MapError):
    pass


class UnknownVertex(MapError):
    pass


class BudgetExceeded(MapError):
    """A search hit its explicit candidate cap before finishing."""

    def __init__(self, message, explored=None):
        super().__init__(message)
        self.explored = explored


class ParseError(MapError):
    def __init__(self, message, line=None, column=None):
        where = "" if line is None else f" (line {line}, column {column})"
        super().__init__(message + where)
        self.line = line
        self.column = column


class ValidationError(MapError):
    pass
