"""Approximation algorithms and exact oracles for the upper chromatic number
of hypergraphs, its decrement, and multiple transversals."""

from .approx import (
    ApproxReport,
    LineHypergraph,
    approx_decrement_general,
    approx_decrement_hyperstar,
    approx_decrement_hypertree,
    build_line_hypergraph,
    coloring_from_2transversal,
    coloring_from_line_set,
    hyperstar_coloring_from_independent_set,
    strip_center,
)
from .core import (
    CColoring,
    DemandVector,
    HostTree,
    Hypergraph,
    InfeasibleDemand,
    InvalidInstance,
    decrement_of_coloring,
    hyperstar_center,
    monochromatic_lines,
    upper_chromatic_2uniform,
    validate_hypergraph,
    verify_c_coloring,
    verify_host_tree,
    verify_multitransversal,
)
from .exact import (
    CnfFormula,
    SizeLimitExceeded,
    exact_decrement_hypertree,
    exact_independence,
    exact_k_transversal,
    exact_multitransversal,
    exact_transversal,
    exact_upper_chromatic,
    min_variable_deletion,
)
from .greedy import (
    greedy_k_transversal,
    greedy_multitransversal,
    greedy_transversal,
    harmonic,
    usefulness,
)

__version__ = "0.1.0"
