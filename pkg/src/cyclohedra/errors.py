class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class CapacityError(InputError):
    """Raised when an exhaustive enumeration is requested above the size cap."""
