"""Exception types shared across the package."""


class InvalidParameter(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SolverFailure(RuntimeError):
    """Raised when the SDP iteration cap is hit; ``bracket`` holds the best bounds seen."""

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class ResourceLimit(RuntimeError):
    pass
