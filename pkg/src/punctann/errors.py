"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the open domain an operation is defined on."""


class ConvergenceError(RuntimeError):
    """An iteration exhausted its budget; indicates a numerics bug, not bad input."""


class PoleError(ArithmeticError):
    """Evaluation was requested too close to a pole of the function."""


class ClassificationError(ValueError):
    """A map does not belong to the conjugacy class the operation requires."""


class ConsistencyError(RuntimeError):
    """A quantity violated an identity it provably satisfies; numerics bug."""
