"""dissecta: exact Mobius calculus on finite posets, lattice valuation
modules, and dissection-theoretic chamber and face counting.

The building blocks:

- poset: finite posets as dense boolean relation matrices.
- incidence: the integer incidence algebra (delta, zeta, Mobius,
  convolution, Mobius inversion).
- lattice: join/meet tables, join-irreducibles, prime ideals,
  distributive/modular/cancellation structure flags.
- mobius_algebra: vectors in Z L, the idempotents u(a), their product,
  and restriction onto induced subposets.
- zlinalg: exact Hermite/Smith normal forms, subgroup membership,
  quotient invariants.
- valuation: the relation submodule spanned by a/\\b + a\\/b - a - b,
  rank facts, induced-idempotent membership, valuation defect sums.
- dissection: chamber statistics, induced arrangements, face counts,
  f- and Mobius polynomials, finite set-model oracle.
- cli: the `dissecta` command.
"""

from .poset import Poset, build_poset
from .incidence import (
    IncidenceFunction,
    convolve,
    delta,
    mobius,
    mobius_invert,
    zeta,
    zeta_transform,
)
from .lattice import (
    Lattice,
    boolean_lattice,
    lattice_from_poset,
    named_lattice,
    set_lattice,
    union_intersection_closure,
)
from .mobius_algebra import (
    GroupVector,
    mobius_idempotent,
    mobius_product,
    restrict_to_subset,
)
from .zlinalg import (
    NormalForm,
    RowSpan,
    hermite_normal_form,
    invariant_factors,
    normal_form,
    quotient_invariants,
    smith_normal_form,
    subgroup_membership,
)
from .valuation import (
    ValuationRelations,
    ValuationTable,
    irreducible_coordinates,
    join_bilinear,
    meet_bilinear,
    subset_idempotent,
    valuation_defect,
    valuation_idempotent,
    valuation_invariants,
    valuation_relations,
    zaslavsky_check,
)
from .dissection import (
    ArrangementPoset,
    FaceProfile,
    SetModel,
    chamber_statistic,
    f_polynomial,
    face_counts,
    identity_report,
    induced,
    load_arrangement,
    mobius_polynomial,
    set_oracle_check,
    validate_set_model,
)
from .polynomial import Poly, Poly2

__version__ = "0.1.0"

__all__ = [
    "ArrangementPoset", "FaceProfile", "GroupVector", "IncidenceFunction",
    "Lattice", "NormalForm", "Poly", "Poly2", "Poset", "RowSpan", "SetModel",
    "ValuationRelations", "ValuationTable", "boolean_lattice", "build_poset",
    "chamber_statistic", "convolve", "delta", "f_polynomial", "face_counts",
    "hermite_normal_form", "identity_report", "induced", "invariant_factors",
    "irreducible_coordinates", "join_bilinear", "lattice_from_poset",
    "load_arrangement", "meet_bilinear", "mobius", "mobius_idempotent", "mobius_invert", "mobius_polynomial",
    "mobius_product", "named_lattice", "normal_form", "quotient_invariants",
    "restrict_to_subset", "set_lattice", "set_oracle_check",
    "smith_normal_form", "subgroup_membership", "subset_idempotent",
    "union_intersection_closure", "validate_set_model", "valuation_defect",
    "valuation_idempotent", "valuation_invariants", "valuation_relations",
    "zaslavsky_check", "zeta", "zeta_transform",
]
