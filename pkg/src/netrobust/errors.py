"""Exception types raised by netrobust."""


class NetRobustError(Exception):
    """Base class for all library errors."""


class ParseError(NetRobustError, ValueError):
    """Malformed network file. ``row`` is the 1-based data line, if known."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row


class EmptyNetworkError(NetRobustError, ValueError):
    pass


class EmptyInputError(NetRobustError, ValueError):
    pass


class NumericalError(NetRobustError, ArithmeticError):
    pass


class UndefinedModularityError(NetRobustError, ZeroDivisionError):
    """Modularity needs at least one edge (it divides by 2m)."""


class CapacityError(NetRobustError, ValueError):
    """Requested more added edges than there are absent cross-partition pairs."""

    def __init__(self, requested, max_k):
        super().__init__(
            f"cannot add {requested} edges: only {max_k} absent pairs available"
        )
        self.requested = requested
        self.max_k = max_k


class GridError(NetRobustError, ValueError):
    pass


class ManifestError(NetRobustError, ValueError):
    pass
