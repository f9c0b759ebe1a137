"""Exception hierarchy shared by all fusionkit modules."""

from __future__ import annotations


class FusionKitError(Exception):
    """Base class for every domain error raised by fusionkit."""


class InvalidGroup(FusionKitError):
    pass


class InvalidAction(InvalidGroup):
    """A semidirect-product action is not a homomorphism into Aut(N)."""


class OrderLimit(InvalidGroup):
    pass


class NotInSubgroup(FusionKitError):
    pass


class GroupMismatch(FusionKitError):
    pass


class NumericalFailure(FusionKitError):
    pass


class NotIntegral(FusionKitError):
    pass


class NotNonnegative(FusionKitError):
    pass


class ReciprocityViolation(FusionKitError):
    pass


class NoPositiveSolution(FusionKitError):
    pass


class HaarViolation(FusionKitError):
    pass


class NonIntegralDimensions(FusionKitError):
    pass


class NotNormal(FusionKitError):
    pass


class NotAdmissible(FusionKitError):
    """Raised when a pair (G, G0) fails admissibility.

    ``witness`` is the offending ``(tau, g, s)`` triple and ``result`` the full
    refusal record.
    """

    def __init__(self, message: str, witness=None, result=None):
        super().__init__(message)
        self.witness = witness
        self.result = result


class AxiomViolation(FusionKitError):
    pass


class SchemaMismatch(FusionKitError):
    pass


class ParseError(FusionKitError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column
