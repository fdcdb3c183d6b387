"""Exception hierarchy shared by every module."""


class TraceNormError(Exception):
    """Base class for all errors raised by the package."""


class NotHermitian(TraceNormError, ValueError):
    pass


class NoConvergence(TraceNormError, RuntimeError):
    pass


class NotPrime(TraceNormError, ValueError):
    pass


class NotOdd(TraceNormError, ValueError):
    pass


class WrongResidueClass(TraceNormError, ValueError):
    pass


class OrderCap(TraceNormError, ValueError):
    pass


class NotPartite(TraceNormError, ValueError):
    def __init__(self, cls, location):
        self.cls = cls
        self.location = location
        super().__init__(f"nonzero entry at {location} inside class {cls}")


class NotSymmetric(TraceNormError, ValueError):
    pass


class ShrinkNotAllowed(TraceNormError, ValueError):
    pass


class DomainError(TraceNormError, ValueError):
    pass


class IndexOutOfRange(TraceNormError, IndexError):
    pass


class VerificationError(TraceNormError, ValueError):
    """A matrix failed the defining identity of its claimed family."""


class FormatError(TraceNormError, ValueError):
    """Malformed matrix file."""
