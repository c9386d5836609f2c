"""Exact-arithmetic toolkit for structure-constant Lie algebras.

Highlights: exact rational / quadratic-extension linear algebra, rational
canonical forms with witnesses, a decision procedure for proportional
similarity cA = C^-1 B C, and constructive classification of solvable
algebras whose derived ideal has dimension 2 or codimension 2.
"""

from .classify_n2 import Classification, Witness, classify_n2
from .codim2 import Codim2Form, Codim2IsoVerdict, codim2_isomorphic, normalize_codim2
from .errors import (
    DimensionError,
    DimensionMismatch,
    ImpossibleBranch,
    NonAbelianDerivedIdeal,
    NonCommuting,
    NotInClass,
    ParamOutOfDomain,
    ShapeMismatch,
    SingularInput,
    SingularTransform,
    SolvlieError,
    Unsupported,
)
from .frobenius import frobenius_form, invariant_factors, min_poly, similar, similarity_witness
from .labels import ClassLabel
from .liealg import (
    BasisChange,
    LieAlgebra,
    StructureTensor,
    ValidationReport,
    validate,
)
from .matrices import (
    Mat,
    SpectralClass2x2,
    char_poly,
    common_eigenvector,
    det,
    inverse,
    kernel_basis,
    rank,
    spectral_classify_2x2,
)
from .propsim import GL2Class, PropSimVerdict, prop_similar, propsim_classify_gl2
from .scalars import QuadExt, sqrt_exact

__all__ = [
    "BasisChange",
    "ClassLabel",
    "Classification",
    "Codim2Form",
    "Codim2IsoVerdict",
    "DimensionError",
    "DimensionMismatch",
    "GL2Class",
    "ImpossibleBranch",
    "LieAlgebra",
    "Mat",
    "NonAbelianDerivedIdeal",
    "NonCommuting",
    "NotInClass",
    "ParamOutOfDomain",
    "PropSimVerdict",
    "QuadExt",
    "ShapeMismatch",
    "SingularInput",
    "SingularTransform",
    "SolvlieError",
    "SpectralClass2x2",
    "StructureTensor",
    "Unsupported",
    "ValidationReport",
    "Witness",
    "char_poly",
    "classify_n2",
    "codim2_isomorphic",
    "common_eigenvector",
    "det",
    "frobenius_form",
    "invariant_factors",
    "inverse",
    "kernel_basis",
    "min_poly",
    "normalize_codim2",
    "prop_similar",
    "propsim_classify_gl2",
    "rank",
    "similar",
    "similarity_witness",
    "spectral_classify_2x2",
    "sqrt_exact",
    "validate",
]
