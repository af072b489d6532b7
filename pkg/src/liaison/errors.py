"""Exception hierarchy shared across the package."""


class LiaisonError(Exception):
    """Base class for package errors."""


class UsageError(LiaisonError):
    """A caller violated a documented precondition (mixed rings, unsaturated input, ...)."""


class DomainError(LiaisonError, ZeroDivisionError):
    """A mathematically undefined operation, e.g. inverting zero in GF(p)."""


class GenericityError(LiaisonError):
    """A seeded generic choice kept failing its postcondition after the retry budget."""


class ConstructionError(LiaisonError):
    """A certified construction produced an object that failed its own verification."""
