from .cone import (
    Cone,
    ConeKey,
    DimensionMismatchError,
    EmptyConeError,
    cone_from_generators,
    cone_from_halfspaces,
    cone_key,
    contains,
    interior_ray,
    intersect,
    is_trivial,
)
from .cyclic import CyclicSystem, cyclic_supports, lift_pretropism, reduced_cyclic_supports
from .engine import (
    PretropismReport,
    PruneMode,
    PruneStats,
    explore_edge_skeleton,
    find_pretropisms,
    horizontal_prune,
    validate_pretropism,
)
from .linalg import ZeroVectorError, nullspace_basis, primitive, rank
from .oracle import OracleResult, OracleTooLargeError, brute_force_pretropisms
from .polytope import (
    EmptySupportError,
    Polytope,
    Support,
    build_polytope,
    edges_touching_face,
    support_face,
)

__version__ = "0.1.0"

__all__ = [
    "Cone",
    "ConeKey",
    "CyclicSystem",
    "DimensionMismatchError",
    "EmptyConeError",
    "EmptySupportError",
    "OracleResult",
    "OracleTooLargeError",
    "Polytope",
    "PretropismReport",
    "PruneMode",
    "PruneStats",
    "Support",
    "ZeroVectorError",
    "brute_force_pretropisms",
    "build_polytope",
    "cone_from_generators",
    "cone_from_halfspaces",
    "cone_key",
    "contains",
    "cyclic_supports",
    "edges_touching_face",
    "explore_edge_skeleton",
    "find_pretropisms",
    "horizontal_prune",
    "interior_ray",
    "intersect",
    "is_trivial",
    "lift_pretropism",
    "nullspace_basis",
    "primitive",
    "rank",
    "reduced_cyclic_supports",
    "support_face",
    "validate_pretropism",
]
