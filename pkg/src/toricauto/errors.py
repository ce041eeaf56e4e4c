"""Exception hierarchy.

User-facing problems (bad input) derive from :class:`ToricError`.
:class:`InvariantViolation` is different in kind: it signals that a
mathematical guarantee failed on validated data, which is a bug or a
counterexample and must never be swallowed.
"""


class ToricError(Exception):
    """Base class for user errors."""


class FanError(ToricError):
    """Raised when a ray list does not describe a complete smooth fan.

    ``index`` is the 1-based label of the offending ray (``None`` when the
    problem is global).
    """

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class TooFewRays(FanError):
    pass


class NonPrimitiveRay(FanError):
    pass


class NotCounterclockwise(FanError):
    pass


class NotComplete(FanError):
    pass


class NotSmooth(FanError):
    pass


class InvalidIndex(ToricError):
    pass


class NotMinusOneCurve(ToricError):
    pass


class NotASymmetry(ToricError):
    pass


class PolarizationNotFound(ToricError):
    pass


class InvariantViolation(AssertionError):
    """A proven property failed on a validated fan."""

    def __init__(self, message: str, rays=None):
        super().__init__(message)
        self.rays = rays
