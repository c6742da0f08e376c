"""Exception hierarchy shared across the package."""


class CongforgeError(Exception):
    """Base class for all errors raised by this package."""


class ConfigurationError(CongforgeError):
    """Invalid prime/precision configuration (e.g. modulus too large)."""


class NotAUnit(CongforgeError):
    """Attempt to invert an element divisible by p."""


class DivisionByZero(CongforgeError, ZeroDivisionError):
    """Denominator of a ratio is zero."""


class NotPIntegral(CongforgeError):
    """A value with negative valuation was reduced to an integer residue."""


class InsufficientPrecision(CongforgeError):
    """More p-adic digits were requested than the computation carries."""


class UnsupportedIndex(CongforgeError, ValueError):
    """Special-value index outside the supported range."""


class OracleSizeError(CongforgeError):
    """Exact-rational oracle invoked beyond its size guard."""
