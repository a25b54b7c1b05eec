"""Exception types shared across the package.

The CLI maps these onto exit codes, so solvers should raise the most
specific one that applies instead of a bare ValueError.
"""


class ParseError(ValueError):
    """Malformed graph / instance / certificate text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An algorithm's input contract is violated (wrong shape, bad bound, ...)."""


class ResourceLimitError(RuntimeError):
    """A configured size or node budget was exceeded; never a wrong answer."""
