"""Level-planar straight-line drawings with a bounded set of edge slopes.

Feasibility, rightmost drawings, partial-drawing extension and simultaneous
drawings for embedded proper level graphs, through mutually dual circulation
and shortest-distance models, with an exhaustive oracle for small instances.
"""

from .distance import (
    DistanceGraph,
    DistEdge,
    Infeasible,
    Labeling,
    NegativeCycleWitness,
    build_distance_graph,
    dump_distance_graph,
    rightmost_drawing,
    shortest_labeling,
    verify_labeling,
)
from .documents import (
    DocumentError,
    emit_drawing,
    emit_instance,
    parse_drawing,
    parse_instance,
)
from .extend import (
    MalformedInstance,
    PartialInstance,
    SimultaneousDrawings,
    SimultaneousInstance,
    augment_with_constraint,
    extend_partial,
    simultaneous,
)
from .flow import (
    Arc,
    Circulation,
    FlowNetwork,
    build_flow_network,
    circulation_to_drawing,
    drawing_to_circulation,
    dump_flow_network,
    find_circulation,
    verify_circulation,
)
from .graphs import (
    BoundaryInfo,
    Drawing,
    LevelGraph,
    ValidationReport,
    Violation,
    add_boundaries,
    check_drawing,
    find_gaps,
    remove_gaps,
    strip_boundaries,
    subdivide_long_edges,
    validate,
    width_bound,
)
from .oracle import (
    EnumerationResult,
    SizeGuardExceeded,
    enumerate_drawings,
    oracle_extendable,
    oracle_simultaneous,
)
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "Arc",
    "BoundaryInfo",
    "Circulation",
    "DistanceGraph",
    "DistEdge",
    "DocumentError",
    "Drawing",
    "EnumerationResult",
    "FlowNetwork",
    "Infeasible",
    "Labeling",
    "LevelGraph",
    "MalformedInstance",
    "NegativeCycleWitness",
    "PartialInstance",
    "SimultaneousDrawings",
    "SimultaneousInstance",
    "SizeGuardExceeded",
    "ValidationReport",
    "Violation",
    "add_boundaries",
    "augment_with_constraint",
    "build_distance_graph",
    "build_flow_network",
    "check_drawing",
    "circulation_to_drawing",
    "drawing_to_circulation",
    "dump_distance_graph",
    "dump_flow_network",
    "emit_drawing",
    "emit_instance",
    "enumerate_drawings",
    "extend_partial",
    "find_circulation",
    "find_gaps",
    "oracle_extendable",
    "oracle_simultaneous",
    "parse_drawing",
    "parse_instance",
    "remove_gaps",
    "render_svg",
    "rightmost_drawing",
    "shortest_labeling",
    "simultaneous",
    "strip_boundaries",
    "subdivide_long_edges",
    "validate",
    "verify_circulation",
    "verify_labeling",
    "width_bound",
]
