"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: invalid input 1, broken internal
invariant 2, configured resource cap exceeded 3.
"""


class BurgermapsError(Exception):
    """Base class for all package errors."""


class InvalidInputError(BurgermapsError):
    """Malformed user input or configuration (CLI exit code 1)."""


class InternalInvariantError(BurgermapsError):
    """An internal consistency check failed (CLI exit code 2)."""


class ResourceLimitError(BurgermapsError):
    """A configured resource cap was exceeded (CLI exit code 3)."""


class ImperfectWordError(InvalidInputError):
    """A word failed validation.

    position is the first failing index (0-based), or len(word) when the
    stack is nonempty after the last letter.
    """

    def __init__(self, position, reason):
        self.position = position
        self.reason = reason
        super().__init__(f"imperfect word at position {position}: {reason}")
