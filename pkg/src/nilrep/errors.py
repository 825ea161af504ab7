"""Exception types shared across the package."""


class NilrepError(Exception):
    """Base class for all errors raised by this package."""


class TooLarge(NilrepError):
    """A requested computation exceeds the supported size bounds."""


class UnsupportedType(NilrepError):
    """A reductive-group family outside the built-in catalog."""


class UnsupportedQuotient(NilrepError):
    """Lower-central quotients are only available for catalog groups."""


class UnsupportedGroup(NilrepError):
    """No finite presentation is available at the required nilpotency class."""


class InexactDivision(NilrepError):
    """A polynomial division that must be exact left a remainder.

    This signals an inconsistent (matrix, degrees) pair, i.e. a caller bug,
    never a rounding issue: all arithmetic here is exact.
    """


class ParseError(NilrepError):
    """Malformed input text; carries the offset and the expected tokens."""

    def __init__(self, message, position, expected=()):
        super().__init__(message)
        self.position = position
        self.expected = tuple(expected)

    def __str__(self):
        base = super().__str__()
        if self.expected:
            return "%s (at position %d, expected one of: %s)" % (
                base, self.position, ", ".join(self.expected))
        return "%s (at position %d)" % (base, self.position)
