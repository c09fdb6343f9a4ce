"""Catenoid stability constants and circle-pair classification in hyperbolic 3-space.

The package computes the classical constants governing spherical catenoids
(the critical neck distance a_c, the minimization threshold a_L, and their
companions), evaluates the area deficit against spanning disks, classifies
disjoint boundary circle pairs by the catenoids they bound, and exports
surface meshes for external viewers.
"""

from .catenoid import (
    AreaReport,
    CatenarySample,
    Catenoid,
    area_deficit,
    area_difference,
    catenary_x,
    concavity_terms,
    disk_area_total,
    gomes_rho,
    mvt_f,
    plane_separation,
    sample_catenary,
    tube_area,
)
from .circles import (
    CatenoidSolutions,
    CircleAtInfinity,
    DegenerateCircleError,
    IntersectingCirclesError,
    IsometryMap,
    apply_isometry,
    axis_translation,
    boundary_circles,
    catenoids_for_circles,
    catenoids_for_separation,
    circle_from_center_radius,
    inversive_product,
    normalize_coaxial,
    plane_distance,
)
from .cli import main
from .competitor import (
    CompetitorReport,
    RegimeKind,
    RegimeLabel,
    classify_regime,
    competitor_area,
    find_cheaper_competitor,
)
from .constants import (
    BracketError,
    ConsistencyError,
    ConstantsBundle,
    RootFindConfig,
    compute_K,
    constants_bundle,
    solve_a_0,
    solve_a_L,
    solve_a_c,
    solve_root,
)
from .mesh import (
    MeshData,
    MeshParams,
    ball_from_halfspace,
    build_mesh,
    export_mesh,
    halfspace_from_ball,
    halfspace_point,
    write_obj,
)
from .quadrature import (
    EvaluationBudgetError,
    QuadratureResult,
    Tolerance,
    quad_finite,
    quad_semi_infinite,
    quad_sqrt_endpoint,
)

__version__ = "0.1.0"

__all__ = [
    "AreaReport",
    "BracketError",
    "CatenarySample",
    "Catenoid",
    "CatenoidSolutions",
    "CircleAtInfinity",
    "CompetitorReport",
    "ConsistencyError",
    "ConstantsBundle",
    "DegenerateCircleError",
    "EvaluationBudgetError",
    "IntersectingCirclesError",
    "IsometryMap",
    "MeshData",
    "MeshParams",
    "QuadratureResult",
    "RegimeKind",
    "RegimeLabel",
    "RootFindConfig",
    "Tolerance",
    "apply_isometry",
    "area_deficit",
    "area_difference",
    "axis_translation",
    "ball_from_halfspace",
    "boundary_circles",
    "build_mesh",
    "catenary_x",
    "catenoids_for_circles",
    "catenoids_for_separation",
    "circle_from_center_radius",
    "classify_regime",
    "competitor_area",
    "compute_K",
    "concavity_terms",
    "constants_bundle",
    "disk_area_total",
    "export_mesh",
    "find_cheaper_competitor",
    "gomes_rho",
    "halfspace_from_ball",
    "halfspace_point",
    "inversive_product",
    "main",
    "mvt_f",
    "normalize_coaxial",
    "plane_distance",
    "plane_separation",
    "quad_finite",
    "quad_semi_infinite",
    "quad_sqrt_endpoint",
    "sample_catenary",
    "solve_a_0",
    "solve_a_L",
    "solve_a_c",
    "solve_root",
    "tube_area",
    "write_obj",
]
