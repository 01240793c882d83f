"""Exception types raised across the package."""


class HGTError(ValueError):
    pass


class RepeatedVertexInEdge(HGTError):
    pass


class OutOfRange(HGTError):
    pass


class DuplicateEdge(HGTError):
    pass


class TooLarge(HGTError):
    """A construction would exceed its size guard.

    ``size`` carries the would-be size so callers can report it.
    """

    def __init__(self, message: str, size: int | None = None):
        super().__init__(message)
        self.size = size


class UnknownName(HGTError):
    pass


class BadParams(HGTError):
    pass


class NotHalfBipartite(HGTError):
    pass


class Overlap(HGTError):
    pass


class NotInjective(HGTError):
    pass


class SearchBudgetExceeded(HGTError):
    pass


class NotTwoOneType(HGTError):
    pass


class ShapeMismatch(HGTError):
    pass


class NotSemiLayered(HGTError):
    pass


class NotLayered(HGTError):
    pass


class ReducedGraphMismatch(HGTError):
    pass


class SharedLayerConflict(HGTError):
    pass


class IsolatedVertex(HGTError):
    pass


class ParseError(HGTError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column
