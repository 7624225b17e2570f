"""Exception types shared across the package."""


class GraphError(ValueError):
    """A graph does not meet the preconditions of an operation."""


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RuntimeError):
    """An exponential-time kernel was asked to exceed its configured cap."""


class SingularSystemError(ArithmeticError):
    pass


class OracleInconsistencyError(ArithmeticError):
    """Counts handed to a reduction cannot come from a genuine counting oracle."""

    def __init__(self, message, index=None):
        self.index = index
        super().__init__(message)
