"""
Exhaustive enumeration of labeled graphs by edge subset.

Edge subsets are visited in binary-reflected Gray code order, so consecutive
graphs differ by one edge and adjacency masks are updated in place. Index i
of the enumeration is the Gray code i ^ (i >> 1), read as an edge subset
over the pairs (u, v), u < v, in lexicographic order.
"""
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from cliquebounds.config import ORACLE_CONFIG
from cliquebounds.errors import DomainError, ResourceLimitError
from cliquebounds.graphs.cliques import clique_counts_from_masks

import logging
logger = logging.getLogger(__name__)


# clique vector -> (enumeration index, adjacency masks) of its first witness
ChunkCensus = Dict[Tuple[int, ...], Tuple[int, Tuple[int, ...]]]


def check_vertex_cap(n: int, allow_long_run: bool = False) -> None:
    """
    Raises:
        DomainError: If n < 1
        ResourceLimitError: Above the hard cap, or above the soft cap without allow_long_run
    """
    if n < 1:
        raise DomainError(f"enumeration needs n >= 1, got {n}")
    if n > ORACLE_CONFIG["hard_cap"]:
        raise ResourceLimitError(f"n={n} exceeds the enumeration hard cap {ORACLE_CONFIG['hard_cap']}")
    if n > ORACLE_CONFIG["soft_cap"] and not allow_long_run:
        raise ResourceLimitError(
            f"n={n} exceeds the soft cap {ORACLE_CONFIG['soft_cap']}; pass allow_long_run to sweep it"
        )


def edge_pairs(n: int) -> List[Tuple[int, int]]:
    """0-based vertex pairs in enumeration bit order."""
    return list(combinations(range(n), 2))


def _degrees_non_increasing(degrees: Sequence[int]) -> bool:
    return all(degrees[i] >= degrees[i + 1] for i in range(len(degrees) - 1))


def walk_graphs(n: int, start: int, stop: int, prune: bool = False) -> Iterator[Tuple[int, List[int]]]:
    """
    Yield (index, adjacency masks) for enumeration indices in [start, stop).

    The masks list is reused between yields; copy it to keep a graph.
    With prune set, only graphs whose degree sequence is non-increasing in
    vertex order are yielded. Every graph has such a relabeling, so the set
    of clique vectors seen over the full range is unchanged.
    """
    pairs = edge_pairs(n)
    masks = [0] * n
    degrees = [0] * n
    code = start ^ (start >> 1)
    for bit, (u, v) in enumerate(pairs):
        if code >> bit & 1:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
            degrees[u] += 1
            degrees[v] += 1
    for index in range(start, stop):
        if not prune or _degrees_non_increasing(degrees):
            yield index, masks
        step = index + 1
        bit = (step & -step).bit_length() - 1
        if bit >= len(pairs):
            break
        u, v = pairs[bit]
        masks[u] ^= 1 << v
        masks[v] ^= 1 << u
        delta = 1 if masks[u] >> v & 1 else -1
        degrees[u] += delta
        degrees[v] += delta


def enumerate_graphs(
    n: int,
    consumer: Callable[[int, List[int]], None],
    prune: bool = False,
    allow_long_run: bool = False,
) -> int:
    """
    Visit every labeled simple graph on n vertices once.

    Args:
        n: Vertex count
        consumer: Called as consumer(index, masks) per graph
        prune: Skip graphs whose degrees increase somewhere along the labels
        allow_long_run: Permit n above the soft cap

    Returns:
        Number of graphs passed to the consumer (2^(n choose 2) without pruning)
    """
    check_vertex_cap(n, allow_long_run)
    total = 1 << (n * (n - 1) // 2)
    visited = 0
    for index, masks in walk_graphs(n, 0, total, prune):
        consumer(index, masks)
        visited += 1
    return visited


def census_chunk(n: int, start: int, stop: int, prune: bool) -> Tuple[int, ChunkCensus]:
    """
    Clique vectors of the graphs in one index range, first witness each.

    Module-level so that a process pool can pickle it.
    """
    seen: ChunkCensus = {}
    counted = 0
    for index, masks in walk_graphs(n, start, stop, prune):
        counts = tuple(clique_counts_from_masks(masks))
        counted += 1
        if counts not in seen:
            seen[counts] = (index, tuple(masks))
    return counted, seen


def chunk_bounds(total: int, chunk_count: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most chunk_count contiguous non-empty ranges."""
    chunk_count = max(1, min(chunk_count, total))
    size, extra = divmod(total, chunk_count)
    bounds = []
    start = 0
    for i in range(chunk_count):
        stop = start + size + (1 if i < extra else 0)
        bounds.append((start, stop))
        start = stop
    return bounds
