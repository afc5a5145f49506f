"""Graphs, clique counting and bound-attaining constructions."""
from .cliques import clique_counts_from_masks, clique_vector, link
from .constructions import (
    best_construction,
    conbd_witness,
    construction1,
    construction2,
    construction3,
)
from .turan import turan_graph, turan_graph_with_parts

__all__ = [
    "best_construction",
    "clique_counts_from_masks",
    "clique_vector",
    "conbd_witness",
    "construction1",
    "construction2",
    "construction3",
    "link",
    "turan_graph",
    "turan_graph_with_parts",
]
