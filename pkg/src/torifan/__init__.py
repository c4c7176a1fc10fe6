"""Exact-arithmetic toolkit for smooth complete toric varieties given as fans:
primitive collections and relations, Fano-type predicates, crepant contraction
classification, anticanonical degrees, fan isomorphism, and the enumeration of
the 16 smooth toric weak del Pezzo surfaces and 15 toric weakened Fano 3-folds.
"""

from .fan import (
    Fan,
    ValidationReport,
    cone_contains,
    fan_from_dict,
    fan_from_json,
    fan_from_rays_2d,
    hirzebruch_fan,
    projective_plane_fan,
    quotient_fan,
    star,
    validate,
)
from .lattice import (
    determinant,
    invariant_factors,
    is_primitive,
    make_primitive,
    smith_normal_form,
    solve_nonneg_integer,
)
from .primitive import (
    PrimitiveRelation,
    RelationLattice,
    is_extremal,
    is_fano,
    is_weak_fano,
    picard_rank,
    primitive_collections,
    relation_lattice,
    two_element_relation_kind,
)
from .contraction import (
    ContractionKind,
    WeakenedVerdict,
    classify_contraction,
    hirzebruch_type,
    is_weakened_fano,
)
from .polytope import (
    AnticanPolytope,
    anticanonical_degree,
    anticanonical_polytope,
    anticanonical_volume,
)
from .isomorphism import FanIso, canonical_key, find_isomorphism
from .catalog import NamedFan, all_named, named_fan, surfaces, threefolds
from .classify import (
    BundleSpec,
    ClassificationReport,
    build_bundle,
    enumerate_weak_del_pezzo,
    enumerate_weakened_threefolds,
    product_with_p1,
    verify_classification,
)

__version__ = "0.1.0"

__all__ = [
    "AnticanPolytope",
    "BundleSpec",
    "ClassificationReport",
    "ContractionKind",
    "Fan",
    "FanIso",
    "NamedFan",
    "PrimitiveRelation",
    "RelationLattice",
    "ValidationReport",
    "WeakenedVerdict",
    "all_named",
    "anticanonical_degree",
    "anticanonical_polytope",
    "anticanonical_volume",
    "build_bundle",
    "canonical_key",
    "classify_contraction",
    "cone_contains",
    "determinant",
    "enumerate_weak_del_pezzo",
    "enumerate_weakened_threefolds",
    "fan_from_dict",
    "fan_from_json",
    "fan_from_rays_2d",
    "find_isomorphism",
    "hirzebruch_fan",
    "hirzebruch_type",
    "invariant_factors",
    "is_extremal",
    "is_fano",
    "is_primitive",
    "is_weak_fano",
    "is_weakened_fano",
    "make_primitive",
    "named_fan",
    "picard_rank",
    "primitive_collections",
    "product_with_p1",
    "projective_plane_fan",
    "quotient_fan",
    "relation_lattice",
    "smith_normal_form",
    "solve_nonneg_integer",
    "star",
    "surfaces",
    "threefolds",
    "two_element_relation_kind",
    "validate",
    "verify_classification",
]
