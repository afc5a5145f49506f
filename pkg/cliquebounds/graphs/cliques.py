"""Clique counting by ordered backtracking over neighbor bit masks."""
from typing import List, Optional, Sequence

from cliquebounds.config import GRAPH_CONFIG
from cliquebounds.errors import DomainError, ResourceLimitError
from cliquebounds.models.graph import CliqueVector, Graph

import logging
logger = logging.getLogger(__name__)


def clique_counts_from_masks(adjacency: Sequence[int], max_size: Optional[int] = None) -> List[int]:
    """
    Count cliques of every size in the graph given by neighbor masks.

    Each clique is counted once, as the increasing sequence of its vertices:
    a partial clique is only extended by candidates above its last vertex.

    Args:
        adjacency: Neighbor bit mask per vertex (0-based bits)
        max_size: Stop at cliques of this size when given

    Returns:
        [c_0, c_1, ...] up to the clique number (or max_size)
    """
    n = len(adjacency)
    limit = n if max_size is None else max_size
    counts = [1]

    def extend(candidates: int, size: int) -> None:
        while candidates:
            low = candidates & -candidates
            candidates ^= low
            v = low.bit_length() - 1
            if size + 1 == len(counts):
                counts.append(0)
            counts[size + 1] += 1
            if size + 1 < limit:
                grown = candidates & adjacency[v]
                if grown:
                    extend(grown, size + 1)

    if n and limit > 0:
        extend((1 << n) - 1, 0)
    return counts


def clique_vector(graph: Graph, max_size: Optional[int] = None) -> CliqueVector:
    """
    Exact clique vector of a graph.

    Raises:
        ResourceLimitError: If the graph exceeds the enumeration cap and no max_size is given
    """
    cap = GRAPH_CONFIG["enumeration_cap"]
    if max_size is None and graph.n > cap:
        raise ResourceLimitError(f"{graph.n} vertices exceed the enumeration cap {cap}; pass max_size")
    if max_size is not None and max_size < 0:
        raise DomainError(f"max_size must be non-negative, got {max_size}")
    counts = clique_counts_from_masks(graph.adjacency, max_size)
    truncated = max_size if max_size is not None and len(counts) > max_size else None
    return CliqueVector(counts=tuple(counts), truncated_at=truncated)


def link(graph: Graph, clique: Sequence[int]) -> Graph:
    """
    Induced subgraph on the common neighbors of a clique.

    Raises:
        DomainError: If `clique` is not a clique of the graph
    """
    if not graph.is_clique(clique):
        raise DomainError(f"{sorted(clique)} is not a clique")
    common = (1 << graph.n) - 1
    for v in clique:
        common &= graph.adjacency[v - 1]
    return graph.induced([v + 1 for v in range(graph.n) if common >> v & 1])
