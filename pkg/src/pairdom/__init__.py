"""Vertices in every minimum paired-dominating set of a block graph."""

from .graph_core import Graph, parse_graph, read_graph
from .judge import Verdict, in_all_min_pds

__all__ = ["Graph", "Verdict", "in_all_min_pds", "parse_graph", "read_graph"]
