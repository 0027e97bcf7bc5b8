"""Finite projective planes, triangle presentations, and the transition
matrices of the associated wall-tiling subshift, with exhaustive
combinatorial verifiers for the supporting counting lemmas.
"""

from a2shift.plane import (
    FiniteField,
    IncidencePlane,
    PlaneIsomorphism,
    dual_plane,
    field_make,
    paper_plane_order3,
    pg2,
    planes_isomorphic,
    verify_plane,
)
from a2shift.presentation import (
    TrianglePresentation,
    builtin_c1,
    close_rotations,
    parse_presentation,
    search_presentations,
    sweep_all_lambdas_q2,
    validate,
)
from a2shift.report import VerificationReport
from a2shift.subshift import (
    BoolMatrix,
    StripWitness,
    build_M1,
    build_M2,
    build_wall,
    down_tile_between,
    find_strip,
    is_irreducible_2d,
    mat_mul_bool,
    mat_mul_int,
    mat_power_bool,
    oracle_pair_realizable,
    primitivity,
    render_strip,
)

__all__ = [
    "BoolMatrix",
    "FiniteField",
    "IncidencePlane",
    "PlaneIsomorphism",
    "StripWitness",
    "TrianglePresentation",
    "VerificationReport",
    "builtin_c1",
    "build_M1",
    "build_M2",
    "build_wall",
    "close_rotations",
    "down_tile_between",
    "dual_plane",
    "field_make",
    "find_strip",
    "is_irreducible_2d",
    "mat_mul_bool",
    "mat_mul_int",
    "mat_power_bool",
    "oracle_pair_realizable",
    "paper_plane_order3",
    "parse_presentation",
    "pg2",
    "planes_isomorphic",
    "primitivity",
    "render_strip",
    "search_presentations",
    "sweep_all_lambdas_q2",
    "validate",
    "verify_plane",
]

__version__ = "0.1.0"
