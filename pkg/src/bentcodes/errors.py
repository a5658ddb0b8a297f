"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class BentCodesError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(BentCodesError):
    pass


class Reducible(BentCodesError):
    pass


class FieldMismatch(BentCodesError):
    pass


class EvenCharacteristic(BentCodesError):
    pass


class PrimeMismatch(BentCodesError):
    pass


class ParamViolation(BentCodesError):
    """A documented precondition failed; the message names the clause."""


class ZeroComponent(BentCodesError):
    pass


class NonPermutationL(BentCodesError):
    pass


class ZeroLeadingCoeff(BentCodesError):
    pass


class EmptySubset(BentCodesError):
    pass


class FullSubset(BentCodesError):
    pass


class DivisibilityViolation(BentCodesError):
    pass


class NotSelfOrthogonal(BentCodesError):
    pass


class SteaneDimensionGap(BentCodesError):
    pass
