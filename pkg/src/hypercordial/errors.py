"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Malformed hypergraph input."""

    def __init__(self, message, edge_index=None):
        super().__init__(message)
        self.edge_index = edge_index


class NotAHypertreeError(ValueError):
    pass


class ContractViolation(ValueError):
    """An operation was called outside its precondition."""


class InvariantViolation(RuntimeError):
    """Something that the construction guarantees did not hold.

    ``trace`` carries the partial labeler trace when raised from inside a
    construction, so callers can dump it for reproduction.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class SprigSearchExhausted(InvariantViolation):
    pass
