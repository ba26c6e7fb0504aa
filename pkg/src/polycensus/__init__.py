"""Census and classification of small polyhedral graphs.

A polyhedral graph is a simple, planar, 3-connected graph.  This
package enumerates them within order/size bounds, computes complements
and duals, and mechanically verifies that exactly three of them have a
polyhedral complement: all three self-complementary (8, 14) graphs of
degree sequence 44443333, exactly one of which is not self-dual.
"""

from .catalog import (
    Catalog,
    CatalogEntry,
    UnknownLabelError,
    assemble,
    build_catalog,
    catalog_from_json,
    catalog_to_json,
    dot_document,
    export,
    graph6_lines,
    import_graph6,
    order_census,
)
from .classify import (
    CandidateRow,
    CaseResult,
    ClassificationError,
    ClassificationReport,
    PruneStep,
    PruneTrace,
    candidate_degree_rows,
    equal_order_size_system,
    prune_order,
    solve_question,
    validate_report,
    verify_planar_complement_bound,
    verify_remark_8_14,
)
from .connectivity import is_3_connected, is_connected, min_degree
from .duality import NotPolyhedralError, dual, is_polyhedral, is_self_dual
from .enumeration import (
    MAX_ENUM_ORDER,
    enumerate_by_size,
    enumerate_polyhedra,
    exhaustive_polyhedra,
    filter_by_degree_sequence,
    order_bounds,
    triangulations,
)
from .graph6 import Graph6Error, decode, encode
from .graphs import (
    MAX_VERTICES,
    DegreeSequence,
    Graph,
    complement_degree_sequence,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    empty_graph,
    path,
    wheel,
)
from .isomorphism import (
    CanonicalForm,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_self_complementary,
)
from .planarity import (
    FaceSet,
    NonPlanarGraphError,
    RotationSystem,
    embed,
    is_planar,
    kuratowski_oracle,
    trace_faces,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "CatalogEntry",
    "UnknownLabelError",
    "assemble",
    "build_catalog",
    "catalog_from_json",
    "catalog_to_json",
    "dot_document",
    "export",
    "graph6_lines",
    "import_graph6",
    "order_census",
    "CandidateRow",
    "CaseResult",
    "ClassificationError",
    "ClassificationReport",
    "PruneStep",
    "PruneTrace",
    "candidate_degree_rows",
    "equal_order_size_system",
    "prune_order",
    "solve_question",
    "validate_report",
    "verify_planar_complement_bound",
    "verify_remark_8_14",
    "is_3_connected",
    "is_connected",
    "min_degree",
    "NotPolyhedralError",
    "dual",
    "is_polyhedral",
    "is_self_dual",
    "MAX_ENUM_ORDER",
    "enumerate_by_size",
    "enumerate_polyhedra",
    "exhaustive_polyhedra",
    "filter_by_degree_sequence",
    "order_bounds",
    "triangulations",
    "Graph6Error",
    "decode",
    "encode",
    "MAX_VERTICES",
    "DegreeSequence",
    "Graph",
    "complement_degree_sequence",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "empty_graph",
    "path",
    "wheel",
    "CanonicalForm",
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "is_self_complementary",
    "FaceSet",
    "NonPlanarGraphError",
    "RotationSystem",
    "embed",
    "is_planar",
    "kuratowski_oracle",
    "trace_faces",
]
