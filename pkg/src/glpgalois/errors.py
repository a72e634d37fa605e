"""Exception types shared across the package."""


class DomainError(ValueError):
    """A mathematically invalid request (bad parameter, violated precondition)."""


class ZeroPolynomialError(DomainError):
    """Operation is undefined for the zero polynomial."""


class BadPrimeError(DomainError):
    """The given prime is unusable for the requested operation."""
