"""Exception hierarchy shared by every module of the package."""


class SphericalRamseyError(Exception):
    """Base class for all errors raised by this package."""


class NotOddPrime(SphericalRamseyError, ValueError):
    pass


class NotCoprime(SphericalRamseyError, ValueError):
    pass


class ParameterOutOfRange(SphericalRamseyError, ValueError):
    pass


class OverflowEnvelopeExceeded(SphericalRamseyError, OverflowError):
    """The covers kernel would leave signed 64-bit range for these parameters."""


class WitnessConstructionFailed(SphericalRamseyError, RuntimeError):
    """A reconstructed real witness did not validate. Indicates a bug."""


class DisjointnessViolated(SphericalRamseyError, ValueError):
    pass


class ConstructionInvalid(SphericalRamseyError, RuntimeError):
    """An alpha certificate construction produced a failing precondition. Indicates a bug."""


class IrrationalAlphaError(SphericalRamseyError, TypeError):
    """Only rational squared ratios can be certified; there is no floating point path."""
