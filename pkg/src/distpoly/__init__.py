"""Exact distance-based graph invariants: Hosoya polynomials, Wiener indices,
closed-form validation for the Jahangir family, and rational formula fitting.
"""

from .closed_forms import (
    ERRATUM_TAGS,
    DegreePartition,
    J5Report,
    J5VerificationResult,
    VerificationReport,
    j5_degree_partition,
    j5_distance_count,
    j5_hosoya,
    j5_report,
    j5_wiener,
    verify_against_oracle,
)
from .distances import (
    DistanceDistribution,
    Orbit,
    OrbitSpec,
    bfs_distances,
    diameter,
    distance_distribution,
    orbit_distance_distribution,
)
from .errors import (
    DisconnectedError,
    DistpolyError,
    DuplicateEdgeError,
    DuplicateSampleParameterError,
    EdgeListFormatError,
    InconsistentSamplesError,
    InsufficientSamplesError,
    InvalidParameterError,
    MalformedOrbitsError,
    SelfLoopError,
    UsageError,
    VertexOutOfRangeError,
)
from .family_fit import (
    FamilyFormula,
    GraphFamily,
    HoldoutReport,
    SampleTable,
    family,
    fit,
    format_rational_poly,
    sample_counts,
    verify_formula,
)
from .generators import (
    complete,
    cycle,
    jahangir,
    path,
    random_connected,
    rotation_orbits,
    star,
    wheel,
)
from .graph import Graph, format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from .hosoya import Polynomial, hosoya_polynomial, wiener_index

__version__ = "0.1.0"

__all__ = [
    "DegreePartition",
    "DisconnectedError",
    "DistanceDistribution",
    "DistpolyError",
    "DuplicateEdgeError",
    "DuplicateSampleParameterError",
    "ERRATUM_TAGS",
    "EdgeListFormatError",
    "FamilyFormula",
    "Graph",
    "GraphFamily",
    "HoldoutReport",
    "InconsistentSamplesError",
    "InsufficientSamplesError",
    "InvalidParameterError",
    "J5Report",
    "J5VerificationResult",
    "MalformedOrbitsError",
    "Orbit",
    "OrbitSpec",
    "Polynomial",
    "SampleTable",
    "SelfLoopError",
    "UsageError",
    "VerificationReport",
    "VertexOutOfRangeError",
    "bfs_distances",
    "complete",
    "cycle",
    "diameter",
    "distance_distribution",
    "family",
    "fit",
    "format_edge_list",
    "format_rational_poly",
    "hosoya_polynomial",
    "j5_degree_partition",
    "j5_distance_count",
    "j5_hosoya",
    "j5_report",
    "j5_wiener",
    "jahangir",
    "orbit_distance_distribution",
    "parse_edge_list",
    "path",
    "random_connected",
    "read_edge_list",
    "rotation_orbits",
    "sample_counts",
    "star",
    "verify_against_oracle",
    "verify_formula",
    "wheel",
    "wiener_index",
    "write_edge_list",
]
