"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Input object is malformed (not a Dyck path, crossing partition, ...)."""


class CapacityError(ValueError):
    """Requested size exceeds a documented enumeration cap."""


class ConsistencyError(AssertionError):
    """An identity that must hold by theory failed on computed data."""
