"""Exception types shared across the package."""


class EpsBialgError(Exception):
    """Base class for all errors raised by this package."""


class KindMismatch(EpsBialgError):
    """Operands belong to different algebras or have different tensor leg counts."""


class DimensionMismatch(KindMismatch):
    """Matrix operands with different dimensions, or indices outside 1..n."""


class AlphabetMismatch(KindMismatch):
    """Word operands over different alphabets."""


class IndexOutOfRange(EpsBialgError):
    """Subword selector violates 1 <= i <= j <= len(word)."""


class LSquareNotZero(EpsBialgError):
    """The matrix L of an L-coproduct must square to zero."""


class WeightNotZero(EpsBialgError):
    """Operation defined only for weight-zero instances."""


class NotNilpotentWithinCap(EpsBialgError):
    """D^k(a) stayed nonzero for every k up to the cap; the antipode series cannot be truncated."""

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"element not annihilated by D within {cap} iterations")


class ParseError(EpsBialgError):
    """Expression text violates the grammar; carries the offending position."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnknownAtom(ParseError):
    """Atom name not resolvable in the selected algebra."""


class UnknownSuite(EpsBialgError):
    """Verification suite name not recognised."""
