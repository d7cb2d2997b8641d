"""Exception hierarchy. Every library error derives from :class:`PcsNetError`."""


class PcsNetError(ValueError):
    """Base class for all errors raised by pcsnet."""


class EmptySet(PcsNetError):
    pass


class DimensionMismatch(PcsNetError):
    pass


class CardinalityMismatch(PcsNetError):
    pass


class NotATriad(PcsNetError):
    pass


class NotInvertibleMultiplier(PcsNetError):
    pass


class UnknownOperator(PcsNetError):
    pass


class UnknownMetric(PcsNetError):
    pass


class UnknownDuration(PcsNetError):
    pass


class NonPositiveDuration(PcsNetError):
    pass


class BadCardinality(PcsNetError):
    pass


class InvalidParams(PcsNetError):
    pass


class NoSuchNode(PcsNetError):
    pass


class EmptySequence(PcsNetError):
    pass


class Disconnected(PcsNetError):
    pass


class ScaffoldTooLarge(PcsNetError):
    pass


class ParseError(PcsNetError):
    def __init__(self, line: int, message: str = "") -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if message else f"line {line}")


class EmptySeries(PcsNetError):
    pass


class UnknownScale(PcsNetError):
    pass


class NoteRange(PcsNetError):
    pass
