"""Exceptions shared across the package."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold."""
