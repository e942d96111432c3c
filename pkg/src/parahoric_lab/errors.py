"""Shared exception types."""


class NotAUnit(ArithmeticError):
    """Inversion was requested for a non-invertible ring element or matrix."""


class SizeLimit(RuntimeError):
    """A requested enumeration exceeds the configured size bound."""


class ShapeMismatch(ValueError):
    """Incompatible block shapes or compositions."""
