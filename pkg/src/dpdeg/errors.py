"""Exception types shared across the package.

Validation failures subclass ValueError so callers can catch broadly; the CLI
maps DpdegError to exit code 1, InternalInvariantViolation to 2 and
BudgetExceeded to 3.
"""


class DpdegError(ValueError):
    """Base class for input/validation errors."""


# -- digraph -----------------------------------------------------------------

class LoopArc(DpdegError):
    pass


class VertexOutOfRange(DpdegError):
    pass


class LoopEdge(DpdegError):
    pass


class NotConnected(DpdegError):
    pass


class Not2Connected(DpdegError):
    pass


# -- property ----------------------------------------------------------------

class BadParameter(DpdegError):
    pass


class NoCRFound(DpdegError):
    pass


class PropertyNotEligible(DpdegError):
    pass


# -- cover -------------------------------------------------------------------

class FibreOverlap(DpdegError):
    pass


class FibreNotIndependent(DpdegError):
    pass


class NotAMatching(DpdegError):
    def __init__(self, u, v, msg=""):
        self.pair = (u, v)
        super().__init__(msg or f"A_H(X_{u}, X_{v}) is not a matching")


class ArcWithoutBaseArc(DpdegError):
    def __init__(self, u, v, msg=""):
        self.pair = (u, v)
        super().__init__(msg or f"cover arc over ({u}, {v}) but ({u}, {v}) is not a base arc")


class EmptyFibre(DpdegError):
    pass


# -- config ------------------------------------------------------------------

class NotStrictlyDegenerate(DpdegError):
    pass


class DisconnectedRemainder(DpdegError):
    pass


# -- constructible -----------------------------------------------------------

class NotABlock(DpdegError):
    pass


class SaturationImpossible(DpdegError):
    pass


class PartsSumMismatch(DpdegError):
    pass


class BadParity(DpdegError):
    pass


class BadOrder(DpdegError):
    pass


class FibreSizeMismatch(DpdegError):
    pass


class SupportNotZero(DpdegError):
    pass


class MatchingViolation(DpdegError):
    pass


# -- solver / criticality ----------------------------------------------------

class NotDegreeFeasible(DpdegError):
    pass


class ScaleCapExceeded(DpdegError):
    pass


class NotCritical(DpdegError):
    pass


class NotListAssociated(DpdegError):
    pass


class BudgetExceeded(RuntimeError):
    """A configured search budget was exhausted before an answer was found."""


class InternalInvariantViolation(AssertionError):
    """Two independent routes inside the solver disagreed; indicates a bug."""


class FormatError(DpdegError):
    """Malformed text input (digraph/cover/configuration files)."""
