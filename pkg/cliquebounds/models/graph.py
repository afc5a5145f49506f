"""Data models for finite simple graphs and their clique vectors."""
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cliquebounds.errors import DomainError

import logging
logger = logging.getLogger(__name__)


class Graph(BaseModel):
    """
    Simple graph on vertices 1..n.

    Adjacency is stored as one bit mask per vertex: bit j-1 of adjacency[i-1]
    is set iff vertices i and j are adjacent.
    """
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    adjacency: Tuple[int, ...] = Field(default=(), description="Neighbor bit mask per vertex")

    @model_validator(mode="after")
    def _validate_adjacency(self) -> "Graph":
        if len(self.adjacency) != self.n:
            raise ValueError(f"expected {self.n} adjacency masks, got {len(self.adjacency)}")
        limit = 1 << self.n
        for i, mask in enumerate(self.adjacency):
            if mask < 0 or mask >= limit:
                raise ValueError(f"vertex {i + 1} has neighbors outside 1..{self.n}")
            if mask >> i & 1:
                raise ValueError(f"vertex {i + 1} has a loop")
            rest = mask
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not self.adjacency[j] >> i & 1:
                    raise ValueError(f"edge {i + 1}-{j + 1} is not symmetric")
                rest ^= low
        return self

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n=n, adjacency=(0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n=n, adjacency=tuple(full ^ (1 << i) for i in range(n)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """
        Build a graph from 1-based edges.

        Raises:
            DomainError: On loops or vertices outside 1..n
        """
        masks = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise DomainError(f"invalid edge ({u}, {v}) for {n} vertices")
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return cls(n=n, adjacency=tuple(masks))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, numbering vertices in node iteration order."""
        index = {node: i + 1 for i, node in enumerate(graph.nodes())}
        return cls.from_edges(len(index), ((index[u], index[v]) for u, v in graph.edges()))

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        """Decode a graph6 string (an optional >>graph6<< header is accepted)."""
        try:
            graph = nx.from_graph6_bytes(text.strip().encode("ascii"))
        except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
            raise DomainError(f"invalid graph6 string {text.strip()!r}: {e}") from e
        return cls.from_networkx(graph)

    @classmethod
    def from_edge_list_text(cls, text: str) -> "Graph":
        """
        Parse the edge-list format: a first line "n <vertex count>" then "u v" per line.

        Raises:
            DomainError: If the header or an edge line is malformed
        """
        lines = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        if not lines or len(lines[0]) != 2 or lines[0][0] != "n":
            raise DomainError("edge list must start with a line 'n <vertex count>'")
        try:
            n = int(lines[0][1])
            edges = [(int(u), int(v)) for u, v in lines[1:]]
        except ValueError as e:
            raise DomainError(f"malformed edge list: {e}") from e
        return cls.from_edges(n, edges)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges())
        return graph

    def to_graph6(self) -> str:
        """graph6 encoding without header or trailing newline."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((u - 1, v - 1) for u, v in self.edges())
        return nx.to_graph6_bytes(graph, header=False).decode("ascii").strip()

    def to_edge_list_text(self) -> str:
        edges = self.edges()
        return f"n {self.n}\n" + "".join(f"{u} {v}\n" for u, v in edges)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges (u, v) with u < v, sorted."""
        return [
            (i + 1, j + 1)
            for i, mask in enumerate(self.adjacency)
            for j in range(i + 1, self.n)
            if mask >> j & 1
        ]

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2

    def neighbors(self, v: int) -> Tuple[int, ...]:
        mask = self.adjacency[v - 1]
        return tuple(j + 1 for j in range(self.n) if mask >> j & 1)

    def degree(self, v: int) -> int:
        return self.adjacency[v - 1].bit_count()

    def mask_of(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            if not 1 <= v <= self.n:
                raise DomainError(f"vertex {v} not in 1..{self.n}")
            mask |= 1 << (v - 1)
        return mask

    def is_clique(self, vertices: Sequence[int]) -> bool:
        chosen = self.mask_of(vertices)
        return all(
            (chosen & ~(1 << (v - 1))) & ~self.adjacency[v - 1] == 0
            for v in vertices
        )

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph on `vertices`, relabeled 1..len(vertices) in the given order."""
        order = list(vertices)
        position = {v: i for i, v in enumerate(order)}
        if len(position) != len(order):
            raise DomainError("induced subgraph vertices must be distinct")
        self.mask_of(order)
        masks = []
        for v in order:
            mask = 0
            for u in self.neighbors(v):
                if u in position:
                    mask |= 1 << position[u]
            masks.append(mask)
        return Graph(n=len(order), adjacency=tuple(masks))

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(1, self.n + 1) if u != v])

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = tuple(mask << self.n for mask in other.adjacency)
        return Graph(n=self.n + other.n, adjacency=self.adjacency + shifted)


class CliqueVector(BaseModel):
    """Counts c_0, c_1, ..., c_d of cliques of each size."""
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(..., description="c_0 .. c_d")
    truncated_at: Optional[int] = Field(None, description="Largest size counted when counting stopped early")

    @model_validator(mode="after")
    def _validate_counts(self) -> "CliqueVector":
        if not self.counts or self.counts[0] != 1:
            raise ValueError("c_0 must be 1: every graph has the empty clique")
        if len(self.counts) > 1 and self.counts[-1] <= 0:
            raise ValueError("trailing entry must be positive")
        return self

    def __getitem__(self, size: int) -> int:
        """c_size, 0 beyond the largest size counted."""
        if 0 <= size < len(self.counts):
            return self.counts[size]
        if self.truncated_at is not None and size > self.truncated_at:
            raise DomainError(f"cliques of size {size} were not counted (limit {self.truncated_at})")
        return 0

    @property
    def clique_number(self) -> int:
        return len(self.counts) - 1
