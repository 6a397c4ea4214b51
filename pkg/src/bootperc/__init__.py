"""r-neighbour bootstrap percolation on degenerate graphs."""

from .bounds import BoundReport, check_runtime, check_theorem, forest_bound_check, min_perc_lower_bound
from .degeneracy import DegeneracyOrdering, compute_ordering, degeneracy_bruteforce, verify_ordering
from .errors import (
    BootpercError,
    BudgetExceeded,
    CertificationError,
    GraphParseError,
    NotApplicableError,
    ParameterError,
    StructuralError,
)
from .extremal import ExtremalParams, build_extremal, certify_extremal, extremal_ratio
from .graph import Graph, from_edge_list, generate, sample_a0, to_edge_list
from .minperc import (
    MinPercReport,
    check_riedl_tree_bounds,
    enumerate_minimal_percolating_sets,
    smallest_percolating_set,
)
from .percolation import PercolationTrace, is_minimal_percolating, percolates, run
from .potential import PotentialTrace, compute_potential_trace, verify_claim

__version__ = "0.1.0"
