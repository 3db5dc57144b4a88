"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""

from __future__ import annotations


class NcConicError(Exception):
    code = "error"

    def __init__(self, detail: str = ""):
        super().__init__(detail)
        self.detail = detail

    def to_json(self) -> dict:
        return {"code": self.code, "detail": self.detail}


# exactfield
class MalformedModulus(NcConicError):
    code = "MalformedModulus"

class ReducibleModulus(NcConicError, ArithmeticError):
    code = "ReducibleModulus"

class DivisionByZero(NcConicError, ZeroDivisionError):
    code = "DivisionByZero"

class ZeroInput(NcConicError):
    code = "ZeroInput"

class NonUnitLeadingCoefficient(NcConicError):
    code = "NonUnitLeadingCoefficient"

class GenericityViolated(NcConicError):
    code = "GenericityViolated"

class CubicDoesNotSplit(NcConicError):
    code = "CubicDoesNotSplit"


# tensoralg / quadratic
class WrongDegree(NcConicError):
    code = "WrongDegree"

class WrongGeneratorCount(NcConicError):
    code = "WrongGeneratorCount"

class InhomogeneousRelation(NcConicError):
    code = "InhomogeneousRelation"

class NotCentral(NcConicError):
    code = "NotCentral"

class KernelNotOneDimensional(NcConicError):
    code = "KernelNotOneDimensional"


# clifford / algclass
class NotCliffordMap(NcConicError):
    code = "NotCliffordMap"

class PBWFailure(NcConicError):
    code = "PBWFailure"

class OddDimension(NcConicError):
    code = "OddDimension"

class NotAssociative(NcConicError):
    code = "NotAssociative"

class NotCommutative(NcConicError):
    code = "NotCommutative"

class WrongDimension(NcConicError):
    code = "WrongDimension"

class UnknownProfile(NcConicError):
    code = "UnknownProfile"


# hesse
class SingularCurve(NcConicError):
    code = "SingularCurve"

class ZeroXi(NcConicError):
    code = "ZeroXi"

class NotOnCurve(NcConicError):
    code = "NotOnCurve"

class BothFormulasVanish(NcConicError):
    code = "BothFormulasVanish"

class CaseMismatch(NcConicError):
    code = "CaseMismatch"

class DifferentLambda(NcConicError):
    code = "DifferentLambda"


# pairs
class InvalidXi(NcConicError):
    code = "InvalidXi"

class GeneratorRejected(NcConicError):
    code = "GeneratorRejected"

class NotAutomorphism(NcConicError):
    code = "NotAutomorphism"

class NotInSquareSpan(NcConicError):
    code = "NotInSquareSpan"

class TypeMismatch(NcConicError):
    code = "TypeMismatch"

class NotSupported(NcConicError):
    code = "NotSupported"

class GroupTooLarge(NcConicError):
    code = "GroupTooLarge"

class TableMismatch(NcConicError):
    code = "TableMismatch"

