"""Exception hierarchy shared by every module.

Each error carries an optional ``location`` naming the offending part of an
input document so the command line can point at it.
"""


class MixedIndexError(Exception):
    def __init__(self, message="", location=None):
        super().__init__(message)
        self.location = location

    def __str__(self):
        msg = super().__str__()
        if self.location:
            return f"{msg} (at {self.location})"
        return msg


class InputError(MixedIndexError):
    """Malformed input text or document."""


class DimensionMismatch(MixedIndexError):
    pass


class NotSymmetric(MixedIndexError):
    pass


class ZeroPolynomial(MixedIndexError):
    pass


class NotSquare(MixedIndexError):
    pass


class IdealIsUnit(MixedIndexError):
    pass


class InfiniteDimensional(MixedIndexError):
    pass


class JacobianClassZero(MixedIndexError):
    pass


class NonRoot(MixedIndexError):
    pass


class ShapeMismatch(MixedIndexError):
    pass


class NotEquilibrium(MixedIndexError):
    pass


class NotInteriorEquilibrium(MixedIndexError):
    pass


class NotInHull(MixedIndexError):
    pass


class DegenerateSimplex(MixedIndexError):
    pass


class EquilibriumCheckFailed(MixedIndexError):
    pass


class NotARoot(MixedIndexError):
    pass


class ZeroScale(MixedIndexError):
    pass


class InternalError(MixedIndexError):
    """A proven invariant was violated; indicates a bug, not bad input."""
