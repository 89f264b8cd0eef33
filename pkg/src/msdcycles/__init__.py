"""Cycle-structure analysis of minimal strong digraphs."""

from .configs import (
    REFERENCE_COUNTS,
    Config,
    InvalidConfigError,
    RealizationError,
    canonical_config,
    canonical_forms,
    count_canonical_configs,
    initial_config,
    is_cut,
    is_valid_config,
    next_config,
    realize_config,
    rotate_config,
)
from .digraph import (
    ArcNotPresentError,
    Cycle,
    CycleEnumeration,
    Digraph,
    NotStronglyConnectedError,
    SccPartition,
    contract,
    cut_points,
    enumerate_cycles,
    is_strongly_connected,
    is_transitive_arc,
    iter_cycles,
    linear_vertices,
    scc_partition,
)
from .files import DigraphParseError, format_digraph, load_digraph, parse_digraph, write_digraph
from .msd import (
    MsdSummary,
    NotAnMsdError,
    check_msd_invariants,
    is_msd,
    is_msd_by_deletion,
    longest_cycle_bounds,
    make_minimal,
    msd_summary,
    random_msd,
)
from .report import CheckReport
from .structure import (
    CycleDecomposition,
    CycleNotInDigraphError,
    HasseDiagram,
    HasseInconsistencyError,
    check_conjecture,
    check_cycle_structure,
    check_hasse_properties,
    check_linear_vertex_bounds,
    decompose,
    run_structure_checks,
)

__version__ = "0.1.0"

__all__ = [
    "ArcNotPresentError",
    "CheckReport",
    "Config",
    "Cycle",
    "CycleDecomposition",
    "CycleEnumeration",
    "CycleNotInDigraphError",
    "Digraph",
    "DigraphParseError",
    "HasseDiagram",
    "HasseInconsistencyError",
    "InvalidConfigError",
    "MsdSummary",
    "NotAnMsdError",
    "NotStronglyConnectedError",
    "RealizationError",
    "REFERENCE_COUNTS",
    "SccPartition",
    "canonical_config",
    "canonical_forms",
    "check_conjecture",
    "check_cycle_structure",
    "check_hasse_properties",
    "check_linear_vertex_bounds",
    "check_msd_invariants",
    "contract",
    "count_canonical_configs",
    "cut_points",
    "decompose",
    "enumerate_cycles",
    "format_digraph",
    "initial_config",
    "is_cut",
    "is_msd",
    "is_msd_by_deletion",
    "is_strongly_connected",
    "is_transitive_arc",
    "is_valid_config",
    "iter_cycles",
    "linear_vertices",
    "load_digraph",
    "longest_cycle_bounds",
    "make_minimal",
    "msd_summary",
    "next_config",
    "parse_digraph",
    "random_msd",
    "realize_config",
    "rotate_config",
    "run_structure_checks",
    "scc_partition",
    "write_digraph",
]
