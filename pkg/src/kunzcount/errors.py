"""Exception hierarchy shared by every kunzcount module."""


class KunzCountError(ValueError):
    """Base class for all library errors."""


class EmptyInput(KunzCountError):
    pass


class NonCofinite(KunzCountError):
    """Generators with gcd > 1 span a semigroup with infinitely many gaps."""


class MultiplicityOne(KunzCountError):
    pass


class InvalidKunz(KunzCountError):
    pass


class DimensionMismatch(KunzCountError):
    pass


class BadMultiplicity(KunzCountError):
    pass


class FrobeniusDivisible(KunzCountError):
    """No semigroup of multiplicity m has a Frobenius number divisible by m."""


class DuplicateCut(KunzCountError):
    pass


class Unbounded(KunzCountError):
    pass


class DomainError(KunzCountError):
    pass


class ResourceLimit(KunzCountError):
    pass


INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise if it does not fit in a signed 64-bit int."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise OverflowError(f"{value} exceeds the signed 64-bit range")
    return value
