"""Spectra, recognition, and eigenvalue bounds for dominating induced matchings."""

from .bounds import (
    BoundsReport,
    IndexInequality,
    NotApplicableError,
    dim_lower_bound_adjacency,
    dim_lower_bound_laplacian,
    dim_lower_bound_signless,
    dim_size_roots,
    dim_size_window,
    full_report,
    index_inequality,
    induced_matching_upper_bound,
    interlacing_counts,
)
from .closedform import (
    QuotientMatrix,
    cdim_principal,
    cdim_radius_upper_bounds,
    cdim_spectrum,
    lift_eigenvector,
    quotient_eigenvalues,
    quotient_matrix,
)
from .eigen import (
    DisconnectedGraphError,
    EigenDecomposition,
    EigenError,
    PrincipalPair,
    Spectrum,
    eig_sym,
    group_spectrum,
    principal_pair,
)
from .graphs import (
    Edge,
    Graph,
    GraphFormatError,
    MatrixKind,
    complete_graph,
    from_edge_list,
    generate_cdim,
    join,
    matrix,
    min_degree,
    null_graph,
    parse_graph_file,
    serialize_graph,
)
from .oracle import (
    OracleResult,
    SizeGuardError,
    all_graphs,
    enumerate_dims,
    max_induced_matching,
    random_graphs,
)
from .recognition import (
    DimCertificate,
    is_dim,
    is_independent_set,
    is_induced_matching,
    recognize_cdim,
    recognize_cdim_spectral,
)
from .sweep import SweepReport, Violation, check_graph, sweep, sweep_exhaustive, sweep_random

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "DimCertificate",
    "DisconnectedGraphError",
    "Edge",
    "EigenDecomposition",
    "EigenError",
    "Graph",
    "GraphFormatError",
    "IndexInequality",
    "MatrixKind",
    "NotApplicableError",
    "OracleResult",
    "PrincipalPair",
    "QuotientMatrix",
    "SizeGuardError",
    "Spectrum",
    "SweepReport",
    "Violation",
    "all_graphs",
    "cdim_principal",
    "cdim_radius_upper_bounds",
    "cdim_spectrum",
    "check_graph",
    "complete_graph",
    "dim_lower_bound_adjacency",
    "dim_lower_bound_laplacian",
    "dim_lower_bound_signless",
    "dim_size_roots",
    "dim_size_window",
    "eig_sym",
    "enumerate_dims",
    "from_edge_list",
    "full_report",
    "generate_cdim",
    "group_spectrum",
    "index_inequality",
    "induced_matching_upper_bound",
    "interlacing_counts",
    "is_dim",
    "is_independent_set",
    "is_induced_matching",
    "join",
    "lift_eigenvector",
    "matrix",
    "max_induced_matching",
    "min_degree",
    "null_graph",
    "parse_graph_file",
    "principal_pair",
    "quotient_eigenvalues",
    "quotient_matrix",
    "random_graphs",
    "recognize_cdim",
    "recognize_cdim_spectral",
    "serialize_graph",
    "sweep",
    "sweep_exhaustive",
    "sweep_random",
]
