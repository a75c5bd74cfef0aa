"""Quintic del Pezzo surfaces over perfect fields, classified exactly.

The library models the rank-5 intersection lattice and the Petersen diagram
of the ten (-1)-curves, enumerates the 19 possible Galois-action types, and
verifies the attached birational constructions with exact finite-field
arithmetic.
"""

from .picard_lattice import (
    CURVES,
    DivisorClass,
    LatticeMap,
    canonical_class,
    curve_class,
    fixed_rank,
    intersect,
    lattice_map_from_curve_perm,
)
from .petersen import (
    all_graph_automorphisms,
    build_graph,
    maximal_disjoint_quadruples,
    action_on_quadruples,
    sym5_to_graph_aut,
)
from .galois_groups import (
    IsoType,
    SubgroupRecord,
    all_conjugacy_classes_of_subgroups,
    all_subgroups,
    centralizer,
    cycle_string,
    generate,
    identify,
    orbits,
    parse_cycles,
)
from .classifier import (
    CremonaProfile,
    GaloisCase,
    classify_case,
    cremona_profile,
    emit_report,
    emit_table,
    theorem1_table,
)
from .finite_geometry import (
    GF,
    GFElement,
    ProjPoint,
    QuadraticMap,
    apply_map,
    collinear,
    conic_through_5,
    factor_mod_p,
    field,
    frobenius_orbit,
    general_position,
    map_order,
    quartic_discriminant,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
