"""Shared exception types."""


class DimensionError(ValueError):
    """Inconsistent vector/matrix/parameter dimensions."""


class ParseError(ValueError):
    """Malformed structure-constant file; message names the offending field."""


class ValidationError(ValueError):
    """Well-formed input violating a structural requirement (e.g. omega not skew)."""


class ConstructionError(RuntimeError):
    """An internal consistency gate failed while assembling an algebraic object."""
