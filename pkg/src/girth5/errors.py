"""Exception types raised across the package."""


class Girth5Error(Exception):
    """Base class for all package errors."""


class NotPrimePower(Girth5Error, ValueError):
    pass


class UnsupportedOrder(Girth5Error, ValueError):
    pass


class SameVertex(Girth5Error, ValueError):
    pass


class EdgeExists(Girth5Error, ValueError):
    pass


class NotBipartitioned(Girth5Error, ValueError):
    pass


class MalformedGraph6(Girth5Error, ValueError):
    pass


class LimitExceeded(Girth5Error, ValueError):
    pass


class TableMismatch(Girth5Error, AssertionError):
    """An exact value disagrees with the reference table; ``n`` names the offender."""

    def __init__(self, message, n=None):
        super().__init__(message)
        self.n = n


class NoPivot(Girth5Error, ValueError):
    pass


class IsolatedPivot(Girth5Error, ValueError):
    pass


class DisjointnessViolation(Girth5Error, ValueError):
    pass


class _CycleError(Girth5Error):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class FreenessViolation(_CycleError, AssertionError):
    pass


class InputHasShortCycle(_CycleError, ValueError):
    pass


class WouldCreateShortCycle(_CycleError, ValueError):
    pass


class NotApplicable(Girth5Error, ValueError):
    pass


class SubsetOutOfRange(Girth5Error, ValueError):
    pass


class SubsetTooLarge(Girth5Error, ValueError):
    pass
