"""Exception hierarchy shared by all modules."""


class RadiusBoundsError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(RadiusBoundsError):
    """Matrix failed the Hermitian symmetry check."""


class NotPSD(RadiusBoundsError):
    """Matrix has an eigenvalue too negative to be clamped to zero."""


class NoConvergence(RadiusBoundsError):
    """Iterative eigensolver exceeded its iteration cap."""


class InvalidExponent(RadiusBoundsError):
    """Exponent outside the admissible range (negative or non-finite)."""


class NegativeResult(RadiusBoundsError):
    """Scalar function produced a negative value on the spectrum."""


class DimensionMismatch(RadiusBoundsError):
    """Operands have incompatible dimensions."""


class NotUnitVector(RadiusBoundsError):
    """Vector is not normalized to unit Euclidean length."""


class UnsupportedDim(RadiusBoundsError):
    """Matrix family cannot be generated at the requested dimension."""


class WitnessNotFound(RadiusBoundsError):
    """Search budget exhausted before a witness matrix was found."""


class ParseError(RadiusBoundsError):
    """Matrix file does not conform to the JSON matrix format."""
