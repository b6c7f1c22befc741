"""Contact representations of planar and 1-planar graphs.

Boxes for 3-connected planar graphs (simultaneously with their duals),
boxes in a shell for prime optimal 1-planar graphs, and L-shapes for all
optimal 1-planar graphs, with an exact geometric verifier.
"""

from .errors import (
    BoxwoodError,
    FormatError,
    InternalInvariantError,
    PreconditionError,
    VerificationError,
)
from .planegraph import (
    PlaneGraph,
    SplitDualInfo,
    dual,
    faces,
    is_three_connected,
    parse_plane_graph,
    serialize_plane_graph,
    split_dual,
    split_outer_face,
)
from . import generate
from .geomverify import (
    Box3,
    Disjoint,
    ExpectedContacts,
    LShape,
    Overlap,
    PointContact,
    ProperContact,
    SegmentContact,
    Shell,
    VerifyReport,
    box_contact,
    contact,
    format_rat,
    grid_bounds,
    parse_rat,
    verify_representation,
)
from .schnyder import (
    CanonicalOrder,
    LevelAssignment,
    OrderedPathPartition,
    SchnyderWood,
    compatible_wood_from_order,
    compute_schnyder_wood,
    dual_schnyder_wood,
    elementary_canonical_order,
    is_compatible,
    is_elementary,
    levels_from_wood,
    next_color,
    ordered_path_partition,
    parse_partition,
    parse_wood,
    prev_color,
    serialize_partition,
    serialize_wood,
    validate_partition,
    validate_wood,
)

__version__ = "0.1.0"

__all__ = [
    "BoxwoodError",
    "FormatError",
    "InternalInvariantError",
    "PreconditionError",
    "VerificationError",
    "PlaneGraph",
    "SplitDualInfo",
    "dual",
    "faces",
    "is_three_connected",
    "parse_plane_graph",
    "serialize_plane_graph",
    "split_dual",
    "split_outer_face",
    "CanonicalOrder",
    "LevelAssignment",
    "OrderedPathPartition",
    "SchnyderWood",
    "compatible_wood_from_order",
    "compute_schnyder_wood",
    "dual_schnyder_wood",
    "elementary_canonical_order",
    "is_compatible",
    "is_elementary",
    "levels_from_wood",
    "next_color",
    "ordered_path_partition",
    "parse_partition",
    "parse_wood",
    "prev_color",
    "serialize_partition",
    "serialize_wood",
    "validate_partition",
    "validate_wood",
    "Box3",
    "Disjoint",
    "ExpectedContacts",
    "LShape",
    "Overlap",
    "PointContact",
    "ProperContact",
    "SegmentContact",
    "Shell",
    "VerifyReport",
    "box_contact",
    "contact",
    "format_rat",
    "grid_bounds",
    "parse_rat",
    "verify_representation",
    "generate",
    "__version__",
]
