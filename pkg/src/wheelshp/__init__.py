"""Topological containment of wheels in small graphs, and generation of
the exception graphs used in wheel-subdivision characterization proofs."""

from .connectivity import bridges, components_minus, is_2connected, is_3connected
from .generation import (
    AttachmentSpec,
    ExceptionList,
    SkipMode,
    candidate_count,
    exception_generator,
    wheelproof,
)
from .graph import Graph, GraphError, graph_copy, graph_equal, make_wheel, new_graph
from .isomorphism import IsoClassSummary, is_isomorphic, iso_classes
from .search import SearchOutcome, Status, find_k_wheel
from .wheel import is_k_wheel

__all__ = [
    "AttachmentSpec",
    "ExceptionList",
    "Graph",
    "GraphError",
    "IsoClassSummary",
    "SearchOutcome",
    "SkipMode",
    "Status",
    "bridges",
    "candidate_count",
    "components_minus",
    "exception_generator",
    "find_k_wheel",
    "graph_copy",
    "graph_equal",
    "is_2connected",
    "is_3connected",
    "is_isomorphic",
    "is_k_wheel",
    "iso_classes",
    "make_wheel",
    "new_graph",
    "wheelproof",
]
