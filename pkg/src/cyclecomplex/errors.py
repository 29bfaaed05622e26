"""Error taxonomy shared by the library, the CLI and the HTTP service.

Every failure mode that callers are expected to handle carries a stable
machine-readable ``code``; the CLI serializes it as ``{"error": code}``.
"""

from __future__ import annotations


class CycleComplexError(Exception):
    """Base class; ``code`` is the stable machine-readable identifier."""

    code = "Error"

    def __init__(self, detail: str = ""):
        self.detail = detail
        super().__init__(f"{self.code}: {detail}" if detail else self.code)


# -- surface construction ---------------------------------------------------

class UnpairedSide(CycleComplexError):
    code = "UnpairedSide"


class OrientationConflict(CycleComplexError):
    code = "OrientationConflict"


class Disconnected(CycleComplexError):
    code = "Disconnected"


class GenusZero(CycleComplexError):
    code = "GenusZero"


# -- multicurve validation --------------------------------------------------

class ParityViolation(CycleComplexError):
    code = "ParityViolation"


class TriangleInequalityViolation(CycleComplexError):
    code = "TriangleInequalityViolation"


class EmptyCurve(CycleComplexError):
    code = "EmptyCurve"


class NotDisjointlyRealizable(CycleComplexError):
    code = "NotDisjointlyRealizable"


# -- cobordism calculus -----------------------------------------------------

class WiringMismatch(CycleComplexError):
    code = "WiringMismatch"


class NegativeGenus(CycleComplexError):
    code = "NegativeGenus"


class VertexHasNoFaces(CycleComplexError):
    code = "VertexHasNoFaces"


class AnnulusInput(CycleComplexError):
    code = "AnnulusInput"


class NullInput(CycleComplexError):
    code = "NullInput"


# -- dual graph reduction ---------------------------------------------------

class VanishedConfiguration(CycleComplexError):
    code = "VanishedConfiguration"


# -- surgery ----------------------------------------------------------------

class NoCrossings(CycleComplexError):
    code = "NoCrossings"


class ClassMismatch(CycleComplexError):
    code = "ClassMismatch"


class KappaOverflow(CycleComplexError):
    code = "KappaOverflow"


# -- enumeration ------------------------------------------------------------

class ZeroClass(CycleComplexError):
    code = "ZeroClass"


# -- CLI / service ----------------------------------------------------------

class ParseError(CycleComplexError):
    code = "ParseError"


class SchemaError(CycleComplexError):
    code = "SchemaError"
