"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed FCIDUMP content; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(ValueError):
    """Input outside an operation's domain (wrong sector, bad occupancy, ...)."""


class CapacityError(RuntimeError):
    """Problem size exceeds a configured dense limit."""


class NumericalError(RuntimeError):
    """A numerical guard tripped (non-finite matrix, negative spectrum, ...)."""
