"""Graphs represented by words through counts of the consecutive pattern 11.

Letters x and y are adjacent at level k when the subword on {x, y} has at
most k factors xx or yy.
"""
from __future__ import annotations

from .graphs import Graph, parse_graph, parse_graph6, serialize_graph6
from .represent import RepresentationError, ReprClaim, Verdict, graph_of_word, pair_counts, verify
from .search import SearchBudget, SearchResult, find_representant, min_level
from .universal import PermutationalWord, represent2, represent2_connected
from .words import Word, format_word, parse_word

__all__ = [
    "Graph",
    "PermutationalWord",
    "ReprClaim",
    "RepresentationError",
    "SearchBudget",
    "SearchResult",
    "Verdict",
    "Word",
    "find_representant",
    "format_word",
    "graph_of_word",
    "min_level",
    "pair_counts",
    "parse_graph",
    "parse_graph6",
    "parse_word",
    "represent2",
    "represent2_connected",
    "serialize_graph6",
    "verify",
]

__version__ = "0.1.0"
