"""Generalized vertex-set energies on graphs and their extremal sets."""

from .characterize import (
    complement_energy_identity,
    cycle_wiener_max_full,
    cycle_wiener_max_spectral,
    equitable_arc_partitions,
    is_balanced,
    is_weakly_balanced,
    path_wiener_maximizers,
    verify_ddr_equivalence,
    wiener_path_formula,
)
from .cycles import CyclicSet, clockwise_distance, multispectrum_clockwise, multispectrum_geodesic, span
from .energy import (
    Kernel,
    cross_distance_multiset,
    distance_multiset,
    distance_product,
    energy,
    harary,
    kernel_from_table,
    kernel_identity,
    kernel_reciprocal,
    kernel_reciprocal_square,
    wiener,
)
from .graphs import (
    Graph,
    GraphError,
    all_pairs_distances,
    build_cycle,
    build_hypercube,
    build_mobius_ladder,
    build_path,
    build_petersen,
    build_star,
    cartesian_product,
    distance_vector,
    from_edge_list,
    is_distance_degree_regular,
    sphere,
)
from .majorization import (
    majorizes,
    reduce_to_consecutive,
    robin_hood_transfer,
    up_transfer,
    weakly_submajorizes,
    weakly_supermajorizes,
)
from .maxeven import (
    JSpec,
    complement_jrep,
    consecutive_multiset,
    enumerate_maximally_even,
    is_maximally_even,
    is_maximally_even_definitional,
    is_maximally_even_spectral,
    j_representation,
)
from .search import (
    EnumerationCapError,
    ExtremalReport,
    Objective,
    ascending_local_search,
    brute_force_extremal,
    canonical_cycle_class,
    descending_local_search,
    is_local_maximizer,
    is_local_minimizer,
    perturbations,
)

__version__ = "0.1.0"
