"""Exception types shared across the package."""


class QuadcertError(Exception):
    """Base class for all package-specific errors."""


class EvenCharacteristicError(QuadcertError):
    """The characteristic 2 is excluded everywhere in this package."""


class NotPrimeError(QuadcertError):
    """A composite number was offered as a field characteristic."""


class DimensionMismatchError(QuadcertError):
    """Matrix or vector dimensions do not line up."""


class SizeMismatchError(QuadcertError):
    """A permutation or map was applied to a point of the wrong length."""


class InvalidProfileError(QuadcertError):
    """The binary presentation of n does not support the block construction."""


class NotOnQuadricError(QuadcertError):
    """The point does not satisfy both defining power-sum equations."""


class OnDiscriminantError(QuadcertError):
    """The point has two equal coordinates, so a denominator vanishes."""


class NoPointFoundError(QuadcertError):
    """Sampling exhausted its budget without finding a valid point."""
