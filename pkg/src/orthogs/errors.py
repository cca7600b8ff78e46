"""Exception types raised across the package."""


class OrthogsError(Exception):
    """Base class for all package errors."""


class PoleError(OrthogsError, ValueError):
    """A Gamma argument is a non-positive rational."""


class RadicandMismatch(OrthogsError, ValueError):
    """Two quadratic-extension scalars live in different fields."""


class NotSquare(OrthogsError, ValueError):
    pass


class IndexOutOfRange(OrthogsError, IndexError):
    pass


class ZeroDenominator(OrthogsError, ZeroDivisionError):
    """A Pochhammer denominator vanishes."""


class DependentBasis(OrthogsError, ValueError):
    """The basis handed to Gram-Schmidt is linearly dependent."""


class ParameterOutOfRange(OrthogsError, ValueError):
    """Weight parameters outside the region where moments converge."""


class SpaceMismatch(OrthogsError, ValueError):
    pass


class DegreeMismatch(OrthogsError, ValueError):
    pass


class NotPositiveDefinite(OrthogsError, ValueError):
    pass
