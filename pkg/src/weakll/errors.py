class DimensionError(ValueError):
    """Operands have incompatible lengths or matrix sizes."""


class ShapeError(ValueError):
    """Two space expressions that must agree do not."""


class HomogeneityError(ValueError):
    """A polarization oracle failed its homogeneity spot-check."""


class TruncationError(ValueError):
    """An exponential construction needs a larger truncation degree."""
