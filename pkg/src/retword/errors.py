"""Exception hierarchy shared by the library and the command line."""


class RetwordError(Exception):
    """Base class for every error raised by :mod:`retword`."""


class InputError(RetwordError, ValueError):
    """Malformed user input: bad words, alphabets, spec files, morphisms."""


class SpecFileError(InputError):
    """A substitution spec file could not be loaded.

    ``field`` names the offending JSON field when one is known.
    """

    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class ErasingMorphismError(InputError):
    """A morphism maps some letter to the empty word."""


class InvalidSubstitution(RetwordError):
    """A substitution violates one of the two defining conditions.

    ``condition`` is 1 (the axiom's image must start with the axiom) or
    2 (the images of the axiom must grow without bound).
    """

    def __init__(self, condition, message):
        self.condition = condition
        super().__init__(f"condition {condition}: {message}")


class ResourceError(RetwordError):
    """A configured hard cap (prefix length, closure size) was exceeded."""


class WindowTooSmall(RetwordError):
    """The analysed window does not contain enough occurrences."""


class DecodingError(RetwordError):
    """A word is not a concatenation of the given return words."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (position {position})")


class ConsistencyError(RetwordError):
    """An internal cross-check failed; signals a violated precondition."""


class HypothesisError(RetwordError):
    """A precondition of the repeat-to-substitution construction failed."""
