"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """Raised when an input violates an operation's precondition."""


class ConvergenceFailure(RuntimeError):
    """Power iteration hit its iteration cap before the bound gap closed."""

    def __init__(self, message, lower, upper, iterations):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.iterations = iterations


class SolverFailure(RuntimeError):
    """Root bracketing failed."""

    def __init__(self, message, bracket):
        super().__init__(message)
        self.bracket = bracket
