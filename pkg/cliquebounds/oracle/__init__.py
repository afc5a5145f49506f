"""Brute-force ground truth over all small graphs."""
from .enumeration import census_chunk, enumerate_graphs, walk_graphs
from .verification import (
    build_extremal_table,
    check_main_theorem,
    sweep_clique_vectors,
    table_from_census,
    verify_main_theorem,
    verify_nonexistence,
)

__all__ = [
    "build_extremal_table",
    "census_chunk",
    "check_main_theorem",
    "enumerate_graphs",
    "sweep_clique_vectors",
    "table_from_census",
    "verify_main_theorem",
    "verify_nonexistence",
    "walk_graphs",
]
