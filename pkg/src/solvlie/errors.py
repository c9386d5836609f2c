"""Exception hierarchy shared by all modules."""


class SolvlieError(Exception):
    pass


class FieldMismatch(SolvlieError):
    """Arithmetic mixed two quadratic extensions with different radicands."""


class DimensionError(SolvlieError):
    pass


class DimensionMismatch(DimensionError):
    pass


class SingularInput(SolvlieError):
    pass


class SingularTransform(SolvlieError):
    pass


class NonCommuting(SolvlieError):
    pass


class NonAbelianDerivedIdeal(SolvlieError):
    pass


class ParamOutOfDomain(SolvlieError):
    pass


class NotInClass(SolvlieError):
    """Input is outside the regime a classifier handles.

    ``reason`` is one of "NotSolvable", "DerivedDimNot2", "JacobiFails",
    "DerivedNotAbelianCodim2", "DimensionTooSmall".
    """

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}{': ' + detail if detail else ''}")


class Unsupported(SolvlieError):
    """Regime the underlying theory leaves open (e.g. two-dimensional
    adjoint algebra on a codimension-2 derived ideal)."""


class ShapeMismatch(SolvlieError):
    pass


class ImpossibleBranch(SolvlieError):
    """A case the theory rules out was reached; indicates a bug, not bad input."""
