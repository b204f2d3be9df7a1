"""Effective-resistance metrics, Laplacian spectra, and extremal eigenvalue
experiments on weighted graphs, centered on constant-resistance cycle families."""

from .extremal import (
    COUNTEREXAMPLE_MARGIN,
    THREE_CYCLE_PRODUCT_BOUND,
    MonotonicityResult,
    RestartBest,
    ScanRow,
    SearchReport,
    TheoremReport,
    UnitCycleBaseline,
    monotonicity_check,
    scan_family,
    search_counterexample,
    unit_cycle_baseline,
    verify_theorem,
)
from .families import (
    DISPUTED_REFERENCES,
    FIGURE_FAMILIES,
    ClosedFormEigenvalues,
    CyclePoint,
    FamilySpec,
    InfeasibleFamilyError,
    figure_family,
    reference_conductance,
    solve_last_cycle_conductance,
    solve_third_conductance,
    three_cycle_graph,
    three_cycle_laplacian,
    two_equal_eigenvalues,
    two_equal_family,
)
from .graphs import (
    DisconnectedGraphError,
    GraphError,
    GraphFormatError,
    WeightedGraph,
    build_graph,
    cycle,
    dump_graph,
    energy,
    is_connected,
    laplacian,
    load_graph,
    parse_graph,
    scale,
)
from .linalg import (
    JacobiConvergenceError,
    NotPositiveDefiniteError,
    Spectrum,
    SymmetricMatrix,
    cholesky_lower,
    eigen_sym,
    solve_spd,
)
from .resistance import (
    IllConditionedWarning,
    ResistanceReport,
    cycle_rho_closed_form,
    effective_resistance,
    effective_resistance_oracle,
    global_resistance,
    metric_check,
    three_cycle_rho,
)

__version__ = "0.1.0"

__all__ = [
    "COUNTEREXAMPLE_MARGIN",
    "THREE_CYCLE_PRODUCT_BOUND",
    "DISPUTED_REFERENCES",
    "FIGURE_FAMILIES",
    "ClosedFormEigenvalues",
    "CyclePoint",
    "DisconnectedGraphError",
    "FamilySpec",
    "GraphError",
    "GraphFormatError",
    "IllConditionedWarning",
    "InfeasibleFamilyError",
    "JacobiConvergenceError",
    "MonotonicityResult",
    "NotPositiveDefiniteError",
    "ResistanceReport",
    "RestartBest",
    "ScanRow",
    "SearchReport",
    "Spectrum",
    "SymmetricMatrix",
    "TheoremReport",
    "UnitCycleBaseline",
    "WeightedGraph",
    "build_graph",
    "cholesky_lower",
    "cycle",
    "cycle_rho_closed_form",
    "dump_graph",
    "effective_resistance",
    "effective_resistance_oracle",
    "eigen_sym",
    "energy",
    "figure_family",
    "global_resistance",
    "is_connected",
    "laplacian",
    "load_graph",
    "metric_check",
    "monotonicity_check",
    "parse_graph",
    "reference_conductance",
    "scale",
    "scan_family",
    "search_counterexample",
    "solve_last_cycle_conductance",
    "solve_spd",
    "solve_third_conductance",
    "three_cycle_graph",
    "three_cycle_laplacian",
    "three_cycle_rho",
    "two_equal_eigenvalues",
    "two_equal_family",
    "unit_cycle_baseline",
    "verify_theorem",
]
