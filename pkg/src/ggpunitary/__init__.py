"""Unipotent branching, theta lifting and spectral decompositions for U_n(F_q)."""

from .classes import (
    ClassFamily,
    ClassType,
    brute_force_orbit_census,
    centralizer_order,
    enumerate_class_types,
    orbit_count,
)
from .multiplicity import (
    GgpModel,
    duality_diagram_check,
    extended_multiplicity,
    ggp_model,
    ggp_partners,
    unipotent_multiplicity,
)
from .partitions import (
    Partition,
    Transversality,
    common_parts,
    first_row_removed,
    is_close,
    is_even,
    part_at,
    parse_partition,
    partitions_of,
    transpose,
    transversality,
    two_hook_additions,
    two_hook_removals,
)
from .qseries import (
    FactoredOrder,
    general_linear_order,
    lusztig_induction_degree,
    regular_character_degree,
    unipotent_degree,
    unitary_group_order,
    weil_dimension,
)
from .spectral import (
    Decomposition,
    DecompositionTerm,
    restriction_decomposition,
    verify_dimension_identity,
    weil_decomposition,
)
from .theta import ThetaSet, alvis_curtis_dual, theta_multiplicity, theta_set

__version__ = "0.1.0"
