"""Exception types shared across the package."""


class TrislitherError(Exception):
    """Base class for all package-specific errors."""


class InvalidParameterError(TrislitherError, ValueError):
    """A numeric parameter (grid size, basis index, ...) is out of range."""


class InvalidEdgeError(TrislitherError, ValueError):
    """An edge does not belong to the grid it was used with."""


class InvalidInputError(TrislitherError, ValueError):
    """An edge set or pattern violates an operation's precondition."""


class NotACycleError(InvalidInputError):
    """An edge set is not a single simple cycle."""

    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not a simple cycle: {reason}")


class RewireError(TrislitherError, RuntimeError):
    """Side-sharing rewiring did not reach a valid fixpoint."""


class FileFormatError(TrislitherError, ValueError):
    """A data file could not be parsed; carries the offending line."""

    def __init__(self, path: str, line_no: int, message: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")
