"""Exception types raised by locpure operations."""


class DimensionMismatch(ValueError):
    """Operands have incompatible shapes or bipartite dimensions."""


class NotHermitian(ValueError):
    """Matrix fails the Hermitian symmetry check."""


class NotUnitary(ValueError):
    """Matrix fails the unitarity check."""


class ZeroOperator(ValueError):
    """An operator that must be nonzero is numerically zero."""


class OrthogonalityViolated(ValueError):
    """Residual state has nonzero overlap with the target state."""


class VanishingProbability(ValueError):
    """Success probability is below the floor where outcomes are defined."""


class NoCrossing(ValueError):
    """The partial-transpose eigenvalue does not change sign on [0, 1]."""


class NotFullRank(ValueError):
    """Density matrix is rank deficient where full rank is required."""
