"""Exception types shared across the package."""


class OperadError(Exception):
    """Base class for all errors raised by this package."""


class NotAPrefix(OperadError):
    """A word was required to be an initial segment of another and is not."""


class IllegitimateInsertion(OperadError):
    """An insertion's side condition failed.

    Carries the path to the offending node when raised while building a
    term from a syntax tree (a string of g/f steps from the root).
    """

    def __init__(self, reason, path=None):
        self.reason = reason
        self.path = path
        if path:
            super().__init__(f"at {path}: {reason}")
        else:
            super().__init__(reason)


class UnknownGenerator(OperadError):
    """A generator name does not occur in the signature."""


class OutOfDomain(OperadError):
    """Argument outside the domain of a rank bijection."""


class FlavorMismatch(OperadError):
    """Two values from different calculi (or signature contexts) were mixed."""


class TypeMismatch(OperadError):
    """Composition of arrows whose endpoints do not chain."""


class IllegitimateIndex(OperadError):
    """A basic arrow's index terms violate its side condition."""


class BoundExceeded(OperadError):
    """A bounded search ran out of budget; carries the partial result."""

    def __init__(self, message, partial):
        super().__init__(message)
        self.partial = partial


class GeneratorMissing(OperadError):
    """A bracket expansion stepped outside the allowed generator set."""


class SoundnessError(OperadError):
    """An internal cross-check failed; indicates a bug, never user error."""


class ParseError(OperadError):
    """Syntax error in an expression, with 1-based position information."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        hint = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{hint}")
