"""liechar: exact character tables, duality and Frobenius-Schur indicators
for small finite groups of Lie type (GL(n, q) and U(n, q) at desk scale).
"""

from .cyclo import Cyclotomic, root_of_unity
from .field import FieldElement, PrimePowerField, make_field, solve_norm_minus_one, sqrt_minus_one
from .group import ConjugacyData, FiniteGroup, Mat, center, class_fusion, conjugacy, generate, subgroup
from .classfun import (
    ClassFunction,
    central_character,
    decompose,
    fs_indicator,
    induce,
    inner_product,
    is_real_valued,
    real_basis_decomposition,
    restrict,
    truncate,
)
from .chartab import CharacterTable, dixon_table, orthogonality_check, structure_constants
from .lie import (
    DualityResult,
    LieGroupData,
    build_gl,
    build_u,
    central_element_z,
    duality,
    gelfand_graev,
    prasad_element,
    regular_characters,
    rho_stable_subsets,
    semisimple_characters,
    standard_parabolic,
    verify_theorems,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "ConjugacyData",
    "Cyclotomic",
    "DualityResult",
    "FieldElement",
    "FiniteGroup",
    "LieGroupData",
    "Mat",
    "PrimePowerField",
    "build_gl",
    "build_u",
    "center",
    "central_character",
    "central_element_z",
    "class_fusion",
    "conjugacy",
    "decompose",
    "dixon_table",
    "duality",
    "fs_indicator",
    "gelfand_graev",
    "generate",
    "induce",
    "inner_product",
    "is_real_valued",
    "make_field",
    "orthogonality_check",
    "prasad_element",
    "real_basis_decomposition",
    "regular_characters",
    "restrict",
    "rho_stable_subsets",
    "root_of_unity",
    "semisimple_characters",
    "solve_norm_minus_one",
    "sqrt_minus_one",
    "standard_parabolic",
    "structure_constants",
    "subgroup",
    "truncate",
    "verify_theorems",
]
