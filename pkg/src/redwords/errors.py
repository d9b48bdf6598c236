"""Exception types shared across the library."""


class DomainError(ValueError):
    """A precondition on an operation's inputs was violated."""


class NotReducedError(DomainError):
    """The operation requires a reduced word."""


class NotGrassmannianError(DomainError):
    """The operation requires a permutation with exactly one descent."""


class NotFoundError(DomainError):
    """A requested crossing or entry does not exist."""


class ParseError(ValueError):
    """Malformed text input.  `column` is the 1-based offset of the offending token."""

    def __init__(self, message: str, column: int):
        super().__init__(message)
        self.column = column


class InternalError(RuntimeError):
    """An invariant the algorithms rely on failed; indicates a bug, not bad input."""
