"""Gallai vertices (vertices on every longest path) in restricted graph classes."""

from .certificates import GallaiResult, validate_certificate
from .finders import FINDERS, find_gallai
from .formats import parse_edge_list, parse_graph6, to_graph6
from .graph import Graph
from .oracle import gallai_vertices, longest_path_report
from .pattern import ClassLabel, find_induced, in_class, is_free, named_pattern

__version__ = "0.1.0"

__all__ = [
    "FINDERS",
    "ClassLabel",
    "GallaiResult",
    "Graph",
    "find_gallai",
    "find_induced",
    "gallai_vertices",
    "in_class",
    "is_free",
    "longest_path_report",
    "named_pattern",
    "parse_edge_list",
    "parse_graph6",
    "to_graph6",
    "validate_certificate",
]
