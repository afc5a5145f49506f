"""Graph model, clique counting, links and Turán graphs."""
import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from cliquebounds.config import GRAPH_CONFIG
from cliquebounds.core.binomial import binom, turan_binom
from cliquebounds.errors import DomainError, ResourceLimitError
from cliquebounds.graphs import clique_counts_from_masks, clique_vector, link, turan_graph, turan_graph_with_parts
from cliquebounds.models.graph import CliqueVector, Graph


def networkx_counts(graph: Graph):
    counts = [1]
    for clique in nx.enumerate_all_cliques(graph.to_networkx()):
        if len(clique) == len(counts):
            counts.append(0)
        counts[len(clique)] += 1
    return counts


class TestGraphModel:

    def test_complete_and_empty(self):
        assert Graph.complete(5).edge_count == 10
        assert Graph.empty(4).edge_count == 0
        assert Graph.complete(0).n == 0

    def test_graph6(self):
        k5 = Graph.complete(5)
        assert k5.to_graph6() == "D~{"
        assert Graph.from_graph6("D~{") == k5
        assert Graph.from_graph6(">>graph6<<D~{\n") == k5
        with pytest.raises(DomainError):
            Graph.from_graph6("not graph6 at all")

    def test_edge_list_text(self):
        graph = Graph.from_edge_list_text("n 4\n# path\n1 2\n2 3\n3 4\n")
        assert graph.edges() == [(1, 2), (2, 3), (3, 4)]
        assert Graph.from_edge_list_text(graph.to_edge_list_text()) == graph
        with pytest.raises(DomainError):
            Graph.from_edge_list_text("1 2\n")
        with pytest.raises(DomainError):
            Graph.from_edge_list_text("n 3\n1 4\n")

    def test_rejects_bad_adjacency(self):
        with pytest.raises(ValueError):
            Graph(n=2, adjacency=(0b10, 0))
        with pytest.raises(ValueError):
            Graph(n=2, adjacency=(0b01, 0b00))
        with pytest.raises(ValueError):
            Graph(n=2, adjacency=(0b10,))

    def test_induced_and_delete(self):
        graph = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 3)])
        sub = graph.induced([3, 1, 2])
        assert sub.edge_count == 3
        assert graph.delete_vertex(4).edges() == [(1, 2), (1, 3), (2, 3)]
        assert graph.disjoint_union(Graph.complete(2)).edge_count == 5
        assert graph.is_clique([1, 2, 3])
        assert not graph.is_clique([1, 2, 4])


class TestCliqueCounting:

    def test_complete_graph(self):
        assert clique_vector(Graph.complete(6)).counts == tuple(binom(6, j) for j in range(7))

    def test_empty_graphs(self):
        assert clique_vector(Graph.empty(0)).counts == (1,)
        assert clique_vector(Graph.empty(3)).counts == (1, 3)

    def test_max_size_truncates(self):
        vector = clique_vector(Graph.complete(6), max_size=3)
        assert vector.counts == (1, 6, 15, 20)
        assert vector.truncated_at == 3
        assert vector[3] == 20
        with pytest.raises(DomainError):
            vector[5]

    def test_vector_indexing_past_clique_number(self):
        vector = clique_vector(Graph.complete(3))
        assert vector.clique_number == 3
        assert vector[7] == 0

    def test_enumeration_cap(self, monkeypatch):
        monkeypatch.setitem(GRAPH_CONFIG, "enumeration_cap", 4)
        with pytest.raises(ResourceLimitError):
            clique_vector(Graph.complete(5))
        assert clique_vector(Graph.complete(5), max_size=2)[2] == 10

    def test_vector_model(self):
        with pytest.raises(ValueError):
            CliqueVector(counts=(2, 1))
        with pytest.raises(ValueError):
            CliqueVector(counts=(1, 3, 0))

    @given(st.integers(min_value=0, max_value=10), st.data())
    def test_matches_networkx(self, n, data):
        pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
        graph = Graph.from_edges(n, chosen)
        assert list(clique_vector(graph).counts) == networkx_counts(graph)
        assert clique_counts_from_masks(graph.adjacency) == networkx_counts(graph)


class TestLink:

    def test_deleting_a_vertex_splits_the_cliques(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 10)
            density = rng.random()
            edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < density]
            graph = Graph.from_edges(n, edges)
            v = rng.randint(1, n)
            whole = clique_vector(graph)
            rest = clique_vector(graph.delete_vertex(v))
            through = clique_vector(link(graph, [v]))
            for size in range(1, n + 1):
                assert whole[size] == rest[size] + through[size - 1], (edges, v, size)

    def test_link_in_complete_graph(self):
        assert link(Graph.complete(4), [1]) == Graph.complete(3)
        assert link(Graph.complete(4), [1, 2]).n == 2

    def test_link_of_non_clique(self):
        graph = Graph.from_edges(3, [(1, 2)])
        with pytest.raises(DomainError):
            link(graph, [1, 3])

    def test_link_counts_cliques_through_the_set(self):
        graph = turan_graph(7, 3)
        vector = clique_vector(graph)
        # each triangle is an edge in the link of each of its three vertices
        assert sum(clique_vector(link(graph, [v]))[2] for v in range(1, 8)) == 3 * vector[3]


class TestTuran:

    @pytest.mark.parametrize("n,r", [(6, 3), (9, 7), (7, 4), (3, 5)])
    def test_clique_counts(self, n, r):
        vector = clique_vector(turan_graph(n, r))
        for size in range(len(vector.counts) + 1):
            assert vector[size] == turan_binom(n, size, r)

    def test_all_small_turan_graphs(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                vector = clique_vector(turan_graph(n, r))
                for size in range(n + 2):
                    assert vector[size] == turan_binom(n, size, r), (n, r, size)

    def test_parts(self):
        graph, parts = turan_graph_with_parts(9, 7)
        assert sorted(len(part) for part in parts) == [1, 1, 1, 1, 1, 2, 2]
        assert sorted(v for part in parts for v in part) == list(range(1, 10))
        for part in parts:
            assert all(not graph.adjacency[u - 1] >> (v - 1) & 1 for u in part for v in part)

    def test_domain(self):
        with pytest.raises(DomainError):
            turan_graph(5, 0)
        assert turan_graph(0, 3).n == 0


class TestKnownCounts:

    def test_k7(self):
        vector = clique_vector(Graph.complete(7))
        assert vector[3] == vector[4] == 35

    def test_k10_minus_an_edge(self):
        edges = [edge for edge in Graph.complete(10).edges() if edge != (1, 2)]
        vector = clique_vector(Graph.from_edges(10, edges))
        assert vector[3] == 112
        assert vector[4] == binom(10, 4) - binom(8, 2)
