"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters outside the range where a formula or operation is defined."""


class TooLargeError(RuntimeError):
    """An exact enumeration would exceed its configured cap."""


class ConstructionError(RuntimeError):
    """A construction failed its own built-in verification."""


class GraphFormatError(ValueError):
    """Malformed graph file content."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
