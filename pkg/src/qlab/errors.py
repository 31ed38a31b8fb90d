"""Exception hierarchy shared by all qlab modules."""


class QlabError(Exception):
    """Base class for every error raised by qlab."""


class DimensionError(QlabError, ValueError):
    """Operand shapes do not fit together."""


class PreconditionError(QlabError, ValueError):
    """An operation was called on input that violates its precondition."""


class GeometryError(QlabError, ValueError):
    """Vectors or operators belong to incompatible geometric spaces."""


class UnsupportedGeometryError(GeometryError):
    """The signature has zero (degenerate) directions."""


class NumericalFailure(QlabError, ArithmeticError):
    """An iterative routine did not converge or a guard tripped."""


class SizeError(QlabError, ValueError):
    """Problem size exceeds what an enumerating routine accepts."""
