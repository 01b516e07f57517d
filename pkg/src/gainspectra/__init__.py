"""Spectra, energies, and verified bounds for complex unit gain graphs."""

from ._kernels import KERNEL_BACKEND
from .coulson import QuadratureError, QuadratureResult, coulson_energy, matching_energy
from .fileio import FileFormatError, loads, dumps, read_path, write_path
from .gains import (
    GainError,
    GainGraph,
    SwitchingFunction,
    assign_cycle_gains,
    cycle_gain,
    is_antibalanced,
    is_balanced,
    pure_imaginary_cycle_gains,
    random_gains,
    switch,
    with_cycle_gain,
)
from .graphs import (
    GraphError,
    Matching,
    SimpleGraph,
    bipartition,
    book,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    double_star,
    girth,
    named_family,
    path_graph,
    simple_cycles,
    stats,
    t1_tree,
)
from .matching import maximum_matching
from .polynomials import (
    PolynomialError,
    char_poly_eigen,
    char_poly_faddeev,
    char_poly_from_matchings,
    char_poly_subgraph,
    enumerate_elementary_subgraphs,
    matching_counts,
    matching_poly,
)
from .spectral import (
    EigensolverError,
    EnergyReport,
    Spectrum,
    adjacency,
    eigensystem,
    energy,
    spectrum,
    underlying_spectral_radius,
)
from .theorems import (
    BoundCheckResult,
    DecompositionResult,
    check_degree_bounds,
    check_matching_bounds,
    check_unicyclic,
    is_balanced_complete_bipartite,
    matching_decomposition,
    nonequienergetic_witness,
    sweep_unicyclic,
    t1_energy,
    verify_suite,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "QuadratureError", "QuadratureResult", "coulson_energy", "matching_energy",
    "FileFormatError", "loads", "dumps", "read_path", "write_path",
    "GainError", "GainGraph", "SwitchingFunction", "assign_cycle_gains",
    "cycle_gain", "is_antibalanced", "is_balanced", "pure_imaginary_cycle_gains",
    "random_gains", "switch", "with_cycle_gain",
    "GraphError", "Matching", "SimpleGraph", "bipartition", "book",
    "complete_bipartite_graph", "complete_graph", "cycle_graph", "disjoint_union",
    "double_star", "girth", "named_family", "path_graph", "simple_cycles",
    "stats", "t1_tree",
    "maximum_matching",
    "PolynomialError", "char_poly_eigen", "char_poly_faddeev",
    "char_poly_from_matchings", "char_poly_subgraph",
    "enumerate_elementary_subgraphs", "matching_counts", "matching_poly",
    "EigensolverError", "EnergyReport", "Spectrum", "adjacency", "eigensystem",
    "energy", "spectrum", "underlying_spectral_radius",
    "BoundCheckResult", "DecompositionResult", "check_degree_bounds",
    "check_matching_bounds", "check_unicyclic", "is_balanced_complete_bipartite",
    "matching_decomposition", "nonequienergetic_witness", "sweep_unicyclic",
    "t1_energy", "verify_suite",
    "__version__",
]
