"""Exception types shared across the package."""


class ResourceError(RuntimeError):
    """A configured enumeration or solver budget was exhausted."""

    def __init__(self, message: str, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class DegeneracyError(ArithmeticError):
    """The instance is degenerate (positive-dimensional, repeated roots, ...)."""

    def __init__(self, message: str = "", **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics
