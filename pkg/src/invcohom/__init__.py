"""Exact invariant-cohomology computations for Lie algebras and connected
affine algebraic groups over fields of characteristic 0.

Everything is computed in exact rational arithmetic: invariant elements of
wedge^2 g, classical Yang-Baxter residuals, supports and symplectic forms,
degree-3 central elements, truncated enveloping-algebra verification of
exponential-twist identities, and the classification of the invariant
second cohomology of a connected group as
Hom(wedge^2 L, k^x) x (z_r (x) z_u) x (wedge^2 g_u)^G.
"""

from .abelian import (
    AlternatingBicharacter,
    FgAbelianGroup,
    HomToKx,
    KxValue,
    hom_to_kx,
)
from .classify import (
    ClassificationReport,
    GroupInput,
    bset_elements,
    classify_commutative,
    classify_connected,
    group_input_from_json,
)
from .invariants import (
    SupportData,
    Tensor3,
    WedgeElement,
    central_element_z,
    check_symplectic_cocycle,
    components_commute,
    cyb_residual,
    invariant_wedge2,
    is_invariant,
    is_minimal,
    split_mixed_invariant,
    support,
    theta_lie,
    wedge_from_symplectic,
)
from .lie import LieAlgebra, Subspace, lie_from_json
from .pbw import (
    PBWContext,
    PBWTensor,
    coboundary,
    coproduct,
    exp_series,
    invariance_defect,
    multiply,
    normal_order,
    twist_defect,
    verify_product_relation,
)

__version__ = "0.1.0"

__all__ = [
    "AlternatingBicharacter",
    "ClassificationReport",
    "FgAbelianGroup",
    "GroupInput",
    "HomToKx",
    "KxValue",
    "LieAlgebra",
    "PBWContext",
    "PBWTensor",
    "Subspace",
    "SupportData",
    "Tensor3",
    "WedgeElement",
    "bset_elements",
    "central_element_z",
    "check_symplectic_cocycle",
    "classify_commutative",
    "classify_connected",
    "coboundary",
    "components_commute",
    "coproduct",
    "cyb_residual",
    "exp_series",
    "group_input_from_json",
    "hom_to_kx",
    "invariance_defect",
    "invariant_wedge2",
    "is_invariant",
    "is_minimal",
    "lie_from_json",
    "multiply",
    "normal_order",
    "split_mixed_invariant",
    "support",
    "theta_lie",
    "twist_defect",
    "verify_product_relation",
    "wedge_from_symplectic",
]
