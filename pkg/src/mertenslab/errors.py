"""Shared exception types."""


class CapacityError(ValueError):
    """A configured capacity (sieve bound, enumeration cap, primorial width) was exceeded."""
