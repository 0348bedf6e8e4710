"""Odd vertex-colourings of graphs embedded on the torus.

Rotation-system embeddings with face tracing, the 6-regular torus
triangulations T(m,n,t) and their constructive 9-colourings, verifiers
for proper / odd / conflict-free / nice colourings, an exact odd
chromatic number solver with a brute-force oracle, and a discharging
engine over exact rationals.
"""

from .colouring import (
    Colouring,
    is_conflict_free,
    is_nice,
    is_odd,
    is_proper,
    nice_witness,
)
from .construct import (
    ColumnRowClassification,
    IntervalPartition,
    base_colouring,
    classify,
    colour_m1,
    colour_m2,
    colour_m_ge3,
    colour_torus,
)
from .discharge import (
    AuditReport,
    Block,
    ChargeLedger,
    apply_rules,
    audit,
    blocks,
    initial_charges,
)
from .embedding import (
    EmbeddedGraph,
    Face,
    build_embedded_graph,
    euler_characteristic,
    is_6regular_triangulation,
    trace_faces,
)
from .graphio import parse_colouring, parse_graph, write_colouring, write_graph
from .solver import (
    PartialColouring,
    chi_odd,
    chi_odd_bruteforce,
    find_odd_colouring,
    forbidden_colours,
)
from .torus import TorusParams, canonical_m1, generate, is_simple, vertex_coords, vertex_id

__all__ = [
    "AuditReport",
    "Block",
    "ChargeLedger",
    "Colouring",
    "ColumnRowClassification",
    "EmbeddedGraph",
    "Face",
    "IntervalPartition",
    "PartialColouring",
    "TorusParams",
    "apply_rules",
    "audit",
    "base_colouring",
    "blocks",
    "build_embedded_graph",
    "canonical_m1",
    "chi_odd",
    "chi_odd_bruteforce",
    "classify",
    "colour_m1",
    "colour_m2",
    "colour_m_ge3",
    "colour_torus",
    "euler_characteristic",
    "find_odd_colouring",
    "forbidden_colours",
    "generate",
    "initial_charges",
    "is_6regular_triangulation",
    "is_conflict_free",
    "is_nice",
    "is_odd",
    "is_proper",
    "is_simple",
    "nice_witness",
    "parse_colouring",
    "parse_graph",
    "trace_faces",
    "vertex_coords",
    "vertex_id",
    "write_colouring",
    "write_graph",
]
