"""Exception types raised across the package."""


class OspError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(OspError, ValueError):
    pass


class NumericalFailureError(OspError, ArithmeticError):
    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class ResourceLimitError(OspError, MemoryError):
    pass


class ContractViolationError(OspError, ValueError):
    pass


class OutputError(OspError, OSError):
    pass
