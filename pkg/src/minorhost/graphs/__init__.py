"""Graph value types, named families and small-scale search oracles."""
from minorhost.graphs.graph import (
    edge_key,
    edge_color,
    induced,
    make_graph,
    normalize,
    uncolored,
    vertex_color,
)

__all__ = [
    "edge_key",
    "edge_color",
    "induced",
    "make_graph",
    "normalize",
    "uncolored",
    "vertex_color",
]
