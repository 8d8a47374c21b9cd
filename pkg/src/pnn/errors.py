"""Exception types shared across the package."""


class PnnError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(PnnError):
    """Pattern/state lengths are inconsistent with each other or the network."""


class LevelOutOfRange(PnnError):
    """A neuron level lies outside [1, q]."""


class SignNotAllowed(PnnError):
    """A signed state was supplied to an unsigned (PNN3-style) network."""


class IndexOutOfRange(PnnError):
    """A neuron index lies outside the network."""


class LengthNotDivisible(PnnError):
    """A binary vector's length is not divisible by the fragment size k+1."""


class NoFeasibleK(PnnError):
    """No mapping parameter satisfies the fragment-count and intactness constraints."""


class UnknownPattern(PnnError):
    """Identifier decoded a pattern number outside the stored range."""
