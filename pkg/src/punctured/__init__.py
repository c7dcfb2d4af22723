"""Cohen-Macaulay modules over the order of a once-punctured polygon, read off tagged triangulations."""

from .polygon import Kind, PolygonCtx, TaggedEdge, all_arcs, all_edges, theta_length
from .triangulation import TaggedTriangulation, enumerate_all, exchange_graph, flip, validate

__all__ = [
    "Kind",
    "PolygonCtx",
    "TaggedEdge",
    "TaggedTriangulation",
    "all_arcs",
    "all_edges",
    "enumerate_all",
    "exchange_graph",
    "flip",
    "theta_length",
    "validate",
]
