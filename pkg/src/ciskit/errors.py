"""Exception hierarchy shared by all ciskit modules."""


class CiskitError(Exception):
    """Base class for ciskit errors."""


class DimensionError(CiskitError):
    """Operands have incompatible or invalid dimensions."""


class SingularMatrixError(CiskitError):
    """A square GF(2) or Z4 matrix required to be invertible is not."""


class TooLargeError(CiskitError):
    """An enumeration exceeds the configured budget."""


class NotCisError(CiskitError):
    """An operation requires a (systematic) CIS code and the input is not one."""


class ConstructionError(CiskitError):
    """A construction's hypotheses (primality, parity, divisibility, ...) fail."""
