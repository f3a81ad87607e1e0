"""Exceptions shared across the package."""


class ParseError(ValueError):
    """Raised when a word, automaton file, or expression fails to parse."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class AlphabetMismatch(ValueError):
    """Raised when an operation receives languages over incompatible alphabets."""


class FactorizationError(RuntimeError):
    """Raised when no residual factorization exists.

    Reaching this on downward closed inputs over disjoint alphabets would
    falsify the factorization theorem, so callers must not swallow it.
    """
