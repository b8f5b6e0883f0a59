"""Exception types raised across the package."""


class GeometryError(ValueError):
    """Base class for invalid inputs to the geometry routines."""


class EqualPoints(GeometryError):
    pass


class InvalidArity(GeometryError):
    pass


class NotAConfiguration(GeometryError):
    """Point degrees or line sizes are not uniform.

    ``offender`` is the first point label or line (frozenset of labels)
    whose degree/size disagrees with the others.
    """

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class DomainMismatch(GeometryError):
    pass


class UnknownPoint(GeometryError):
    def __init__(self, message, labels=()):
        super().__init__(message)
        self.labels = tuple(labels)


class LimitExceeded(RuntimeError):
    pass


class InconsistentInput(GeometryError):
    pass


class PropertyViolated(AssertionError):
    """A verified combinatorial property failed; ``witness`` holds a counterexample."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoCommonMark(PropertyViolated):
    pass


class UnknownSelector(ValueError):
    pass


class UnsupportedFormat(ValueError):
    pass
