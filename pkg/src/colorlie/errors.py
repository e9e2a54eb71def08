"""Exception hierarchy shared by all colorlie modules."""


class ColorLieError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(ColorLieError):
    """Objects from incompatible parents were combined (group/order/dim mismatch)."""


class ValidationError(ColorLieError):
    """An input object violates one of its construction invariants."""


class ParseError(ColorLieError):
    """A text input could not be parsed; carries a location when known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {column})" if column is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ConsistencyError(ColorLieError):
    """Two independent computation routes disagreed; signals an internal bug."""
