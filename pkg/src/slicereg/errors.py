"""Exception hierarchy shared by every slicereg module."""


class SliceRegError(Exception):
    """Base class for all library errors."""


class ZeroRotor(SliceRegError):
    pass


class IrrationalNorm(SliceRegError):
    pass


class AntipodalDirections(SliceRegError):
    pass


class ArityMismatch(SliceRegError):
    pass


class NonCommutingPoint(SliceRegError):
    pass


class NotMonic(SliceRegError):
    pass


class BadIndex(SliceRegError):
    pass


class IndexClash(SliceRegError):
    pass


class ChainOrderViolation(SliceRegError):
    pass


class DegenerateSphere(SliceRegError):
    pass


class NotArrangedPair(SliceRegError):
    pass


class NotArranged(SliceRegError):
    pass


class RealComponent(SliceRegError):
    pass


class InvalidBalloon(SliceRegError):
    pass


class InvalidFrame(SliceRegError):
    pass


class NotOnSlice(SliceRegError):
    pass


class NegativeShadow(SliceRegError):
    pass


class NotACommonZero(SliceRegError):
    pass


class UnknownVariable(SliceRegError):
    pass


class PolySyntaxError(SliceRegError):
    """Malformed expression text; ``position`` is the 0-based column."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
