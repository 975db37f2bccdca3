"""Evolutionary design of multicopter morphologies.

Genotypes encode rotor count and per-arm geometry; designs are scored on
thrust-to-weight, worst-axis maneuverability, and planform footprint, with
hover feasibility (static, spinning, or none) acting as a ranking tier above
the Pareto comparison. See the README for the model and the CLI.
"""

from .dynamics import (
    ActuatorMatrices,
    MassProperties,
    angular_accel_diagnostic,
    effectiveness,
    mass_properties,
)
from .evolve import (
    EvolutionConfig,
    GenerationStats,
    Individual,
    RunRecord,
    arithmetic_crossover,
    binary_tournament,
    crowding_distance,
    dominates,
    evolve,
    fast_non_dominated_sort,
    front_hypervolume,
    hypervolume,
    latin_hypercube_init,
    mutate,
)
from .genome import (
    GENE_COUNT,
    InvalidLayoutError,
    Phenotype,
    PropellerSpec,
    decode,
    prop_count_from_gene,
    quadcopter_baseline,
    resolve_collisions,
)
from .hover import (
    HoverClass,
    HoverSolution,
    classify_hover,
    solve_spinning_hover,
    solve_static_hover,
)
from .objectives import (
    ObjectiveVector,
    evaluate,
    maneuverability,
    planform_size,
    thrust_to_weight,
)
from .params import DEFAULT_PARAMS, TOL_EQ, PhysicalParams

__version__ = "0.1.0"

__all__ = [
    "ActuatorMatrices",
    "DEFAULT_PARAMS",
    "EvolutionConfig",
    "GENE_COUNT",
    "GenerationStats",
    "HoverClass",
    "HoverSolution",
    "Individual",
    "InvalidLayoutError",
    "MassProperties",
    "ObjectiveVector",
    "Phenotype",
    "PhysicalParams",
    "PropellerSpec",
    "RunRecord",
    "TOL_EQ",
    "angular_accel_diagnostic",
    "arithmetic_crossover",
    "binary_tournament",
    "classify_hover",
    "crowding_distance",
    "decode",
    "dominates",
    "effectiveness",
    "evaluate",
    "evolve",
    "fast_non_dominated_sort",
    "front_hypervolume",
    "hypervolume",
    "latin_hypercube_init",
    "maneuverability",
    "mass_properties",
    "mutate",
    "planform_size",
    "prop_count_from_gene",
    "quadcopter_baseline",
    "resolve_collisions",
    "solve_spinning_hover",
    "solve_static_hover",
    "thrust_to_weight",
]
