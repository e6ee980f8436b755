"""Exact tools for nilpotent Lie algebras and their solvable and Levi extensions."""

from .catalog import CatalogEntry, catalog_lookup
from .derivations import (
    DerivationSpace,
    derivation_space,
    is_characteristically_nilpotent,
    is_nilindependent,
    is_nilpotent_derivation,
)
from .errors import (
    AnalysisError,
    InputError,
    JacobiError,
    NilextError,
    NotADerivationError,
    NotNilpotentError,
    ParseError,
    UnsupportedFactorError,
)
from .extensions import (
    AdaptedBasis,
    BlockView,
    adapted_basis,
    block_view,
    m1_block,
    m1_block_commutation,
    nilradical_lower_bound,
    solvable_extension_bound,
)
from .levi import (
    CharacteristicFlag,
    IrrepAssignment,
    ScreenReport,
    build_characteristic_flag,
    enumerate_irrep_assignments,
    flag_excludes,
    levi_screen,
    sl2_tensor_decomp,
    weight_screen,
)
from .liecore import Scalar, StructureTable, Subspace, bracket_subspaces, subspace_ops, validate_lie_algebra
from .series import (
    GradedAlgebra,
    SeriesChain,
    associated_graded,
    centralizer,
    characteristic_series,
    relative_ideal,
)
from .textformat import parse_algebra_text, serialize_algebra

__version__ = "0.1.0"

__all__ = [
    "adapted_basis",
    "AdaptedBasis",
    "AnalysisError",
    "associated_graded",
    "block_view",
    "BlockView",
    "bracket_subspaces",
    "build_characteristic_flag",
    "catalog_lookup",
    "CatalogEntry",
    "centralizer",
    "characteristic_series",
    "CharacteristicFlag",
    "derivation_space",
    "DerivationSpace",
    "enumerate_irrep_assignments",
    "flag_excludes",
    "GradedAlgebra",
    "InputError",
    "IrrepAssignment",
    "is_characteristically_nilpotent",
    "is_nilindependent",
    "is_nilpotent_derivation",
    "JacobiError",
    "levi_screen",
    "m1_block",
    "m1_block_commutation",
    "NilextError",
    "nilradical_lower_bound",
    "NotADerivationError",
    "NotNilpotentError",
    "parse_algebra_text",
    "ParseError",
    "relative_ideal",
    "Scalar",
    "ScreenReport",
    "serialize_algebra",
    "SeriesChain",
    "sl2_tensor_decomp",
    "solvable_extension_bound",
    "StructureTable",
    "Subspace",
    "subspace_ops",
    "UnsupportedFactorError",
    "validate_lie_algebra",
    "weight_screen",
]
