"""Exact invariants of normal surface singularities from resolution dual graphs."""
from .boundary import BoundaryCurve, BoundarySpec, triple_classify
from .classify import SingularityReport, analyze, classify
from .cycles import Cycle, compute_invariants, intersect
from .graph import DualGraph, parse_graph, parse_graph_file, serialize_graph

__version__ = "0.1.0"

__all__ = [
    "BoundaryCurve",
    "BoundarySpec",
    "Cycle",
    "DualGraph",
    "SingularityReport",
    "analyze",
    "classify",
    "compute_invariants",
    "intersect",
    "parse_graph",
    "parse_graph_file",
    "serialize_graph",
    "triple_classify",
]
