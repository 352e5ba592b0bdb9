"""singlat: exact combinatorial invariants of resolution graphs of normal
surface singularities.

All arithmetic is exact (arbitrary-precision integers and rationals); every
operation is a pure function over immutable values.
"""

from .chimin import ChiMinResult, arithmetic_genus, min_chi, pg_lower_bound
from .cycles import (
    Cycle,
    canonical_cycle,
    chi,
    dual_basis,
    dual_cycle,
    enumerate_antinef,
    format_cycle,
    is_antinef,
    is_numerically_gorenstein,
    pairing,
    parse_cycle,
    vertex_pairings,
)
from .errors import (
    CycleError,
    GraphError,
    GraphParseError,
    NotNegativeDefiniteError,
    SearchLimitError,
    SinglatError,
    SpliceError,
)
from .graph import (
    DefinitenessResult,
    MinimalGoodResult,
    ResolutionGraph,
    Vertex,
    build_graph,
    definiteness,
    extend_with_minus_one,
    intersection_matrix,
    is_minimal_good,
    parse_graph,
)
from .laufer import (
    ComputationSequence,
    SequenceStep,
    antinef_closure,
    artin_cycle,
    laufer_sequence,
    score_sequence,
)
from .pathbound import (
    DEFAULT_STATE_LIMIT,
    BoundsReport,
    PathResult,
    bounds_report,
    path_gamma,
    path_value,
)
from .report import (
    InvariantReport,
    KodairaCheck,
    build_report,
    check_kodaira,
    report_json,
    report_text,
)
from .splice import (
    LeadingForm,
    SemigroupVerdict,
    SpliceDiagram,
    SpliceEdge,
    edge_determinant,
    leading_forms,
    semigroup_condition,
    semigroup_member,
    splice_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "ChiMinResult", "arithmetic_genus", "min_chi", "pg_lower_bound",
    "Cycle", "canonical_cycle", "chi", "dual_basis", "dual_cycle",
    "enumerate_antinef", "format_cycle", "is_antinef",
    "is_numerically_gorenstein", "pairing", "parse_cycle", "vertex_pairings",
    "CycleError", "GraphError", "GraphParseError", "NotNegativeDefiniteError",
    "SearchLimitError", "SinglatError", "SpliceError",
    "DefinitenessResult", "MinimalGoodResult", "ResolutionGraph", "Vertex",
    "build_graph", "definiteness", "extend_with_minus_one",
    "intersection_matrix", "is_minimal_good", "parse_graph",
    "ComputationSequence", "SequenceStep", "antinef_closure", "artin_cycle",
    "laufer_sequence", "score_sequence",
    "DEFAULT_STATE_LIMIT", "BoundsReport", "PathResult", "bounds_report",
    "path_gamma", "path_value",
    "InvariantReport", "KodairaCheck", "build_report", "check_kodaira",
    "report_json", "report_text",
    "LeadingForm", "SemigroupVerdict", "SpliceDiagram", "SpliceEdge",
    "edge_determinant", "leading_forms", "semigroup_condition",
    "semigroup_member", "splice_diagram",
]
