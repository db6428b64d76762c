"""Exception types shared across the package.

Each class maps onto one CLI exit code (see ``metaqaoa.cli``).
"""


class ArgumentError(ValueError):
    """Invalid argument or configuration value."""


class CapabilityError(RuntimeError):
    """Request exceeds a documented size or memory bound."""


class CoefficientOverflowError(OverflowError):
    """QUBO coefficients do not fit in a signed 64-bit integer."""
