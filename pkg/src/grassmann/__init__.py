"""Exact exterior (Grassmann) algebra.

Multivectors with canonical normal forms, determinants computed three ways,
automorphisms and their semidirect factorization, and a sampling-based
checker for invariant graded subalgebras.
"""

from .determinant import (
    SquareMatrix,
    det_cofactor,
    det_leibniz,
    det_uniqueness_check,
    det_wedge,
)
from .errors import (
    CharacteristicError,
    FieldMismatchError,
    GrassmannError,
    InvalidFormError,
    MorphismValidationError,
    NotAnAutomorphismError,
    ParseError,
    SignatureMismatchError,
)
from .exterior import (
    AlgebraSignature,
    Blade,
    Multivector,
    add_scale,
    basis_enumerate,
    blade_wedge_sign,
    grade_project,
    wedge,
)
from .invariant import (
    GradeSetSpec,
    InvarianceReport,
    classify_bruteforce,
    gradeset_from_form,
    invariance_check,
    is_subalgebra,
)
from .linalg import LinearMap
from .morphisms import (
    AlgebraMorphism,
    apply_morphism,
    center_basis,
    comm_subalgebra_basis,
    commutator,
    compose,
    exp_inner_derivation,
    filtration_degree,
    induced_grade_map,
    invert_automorphism,
    is_automorphism,
    lift_linear,
    morphism_from_images,
    random_automorphism,
    semidirect_factor,
)
from .parsing import format_canonical, parse_expr
from .scalars import GF, QQ, FieldSpec, Residue, field_arith
from .tensor import FreeWord, RelationMode, char2_report, normalize_word, poly_normalize

__all__ = [
    "SquareMatrix",
    "det_cofactor",
    "det_leibniz",
    "det_uniqueness_check",
    "det_wedge",
    "CharacteristicError",
    "FieldMismatchError",
    "GrassmannError",
    "InvalidFormError",
    "MorphismValidationError",
    "NotAnAutomorphismError",
    "ParseError",
    "SignatureMismatchError",
    "AlgebraSignature",
    "Blade",
    "Multivector",
    "add_scale",
    "basis_enumerate",
    "blade_wedge_sign",
    "grade_project",
    "wedge",
    "GradeSetSpec",
    "InvarianceReport",
    "classify_bruteforce",
    "gradeset_from_form",
    "invariance_check",
    "is_subalgebra",
    "LinearMap",
    "AlgebraMorphism",
    "apply_morphism",
    "center_basis",
    "comm_subalgebra_basis",
    "commutator",
    "compose",
    "exp_inner_derivation",
    "filtration_degree",
    "induced_grade_map",
    "invert_automorphism",
    "is_automorphism",
    "lift_linear",
    "morphism_from_images",
    "random_automorphism",
    "semidirect_factor",
    "format_canonical",
    "parse_expr",
    "GF",
    "QQ",
    "FieldSpec",
    "Residue",
    "field_arith",
    "FreeWord",
    "RelationMode",
    "char2_report",
    "normalize_word",
    "poly_normalize",
]

__version__ = "0.1.0"
