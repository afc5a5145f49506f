"""Turán graphs T_{n,r}."""
from typing import List, Tuple

import networkx as nx

from cliquebounds.errors import DomainError
from cliquebounds.models.graph import Graph

import logging
logger = logging.getLogger(__name__)


def turan_graph_with_parts(n: int, r: int) -> Tuple[Graph, List[List[int]]]:
    """
    Build T_{n,r} and report its parts.

    With r >= n every vertex is its own part (the complete graph).

    Returns:
        (graph, parts) where parts lists 1-based vertices, smallest parts first
    """
    if n < 0 or r < 1:
        raise DomainError(f"turan_graph needs n >= 0 and r >= 1, got n={n}, r={r}")
    if n == 0:
        return Graph.empty(0), []
    nx_graph = nx.turan_graph(n, min(r, n))
    graph = Graph.from_networkx(nx_graph)
    parts: dict = {}
    for position, node in enumerate(nx_graph.nodes()):
        parts.setdefault(nx_graph.nodes[node]["subset"], []).append(position + 1)
    return graph, [parts[key] for key in sorted(parts)]


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with parts as equal as possible."""
    graph, _ = turan_graph_with_parts(n, r)
    return graph
