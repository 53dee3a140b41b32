"""Exceptions raised when an operation's preconditions are violated."""


class RelkinError(ValueError):
    """Base class for every precondition failure in relkin."""


class ZeroVelocityError(RelkinError):
    pass


class DegenerateDenominatorError(RelkinError):
    pass


class SuperluminalBoostError(RelkinError):
    pass


class ZeroTimeError(RelkinError):
    pass


class ZeroCoordinateError(RelkinError):
    pass


class CoordinateOverflowError(ZeroCoordinateError):
    """The coordinate is nonzero but too small for its reciprocal to be a finite float."""


class PerpendicularAxisError(RelkinError):
    """The reciprocity axis is orthogonal to the vector being reciprocated."""


class SuperluminalInputError(RelkinError):
    pass


class SpacelikeInputError(RelkinError):
    pass


class DegenerateRotatedVelocityError(RelkinError):
    """The bilinear square of the rotated velocity vanishes."""


class IrrationalRootError(RelkinError):
    """An exact evaluation needs the square root of a non-square rational."""


class InvalidParametersError(RelkinError):
    pass


class UnknownFamilyError(RelkinError):
    pass
