"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix/subsystem dimensions are inconsistent or exceed the size cap."""


class ParameterError(ValueError):
    """A parameter violates its documented constraints."""


class DomainError(ValueError):
    """A scalar argument lies outside the function's domain."""


class ContractError(ValueError):
    """An input violates a numerical contract (e.g. non-Hermitian matrix)."""


class CapabilityError(RuntimeError):
    """The requested quantity cannot be certified in this regime."""
