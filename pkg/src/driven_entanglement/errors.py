"""Exception types raised across the package."""


class EntanglementError(ValueError):
    """Base class for all package errors."""


class NotHermitian(EntanglementError):
    pass


class DimensionMismatch(EntanglementError):
    pass


class NotPositive(EntanglementError):
    pass


class OutOfRange(EntanglementError):
    pass


class ConstraintViolated(EntanglementError):
    pass


class NegativeParameter(EntanglementError):
    pass


class NotNormalized(EntanglementError):
    pass


class UnsupportedScenario(EntanglementError):
    pass


class EmptyTrace(EntanglementError):
    pass


class GridMismatch(EntanglementError):
    pass
