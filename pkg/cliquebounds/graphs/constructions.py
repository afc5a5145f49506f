"""Graphs attaining lgbd, smbd and the constructive lower bound."""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from cliquebounds.config import GRAPH_CONFIG
from cliquebounds.core.binomial import binom, turan_binom, turan_part_sizes
from cliquebounds.core.bounds import conbd_lower, lgbd, main_bound, smbd
from cliquebounds.core.representations import cascade_terms, colored_terms, lgbd_parts
from cliquebounds.errors import CliqueBoundsError, DomainError, InapplicableConstructionError
from cliquebounds.graphs.cliques import clique_vector
from cliquebounds.graphs.turan import turan_graph_with_parts
from cliquebounds.models.construction import ConstructionPlan, ConstructionTag
from cliquebounds.models.graph import Graph

import logging
logger = logging.getLogger(__name__)


class GraphBuilder:
    """Mutable adjacency masks used while assembling a construction."""

    def __init__(self):
        self.masks: List[int] = []

    def add_vertex(self) -> int:
        self.masks.append(0)
        return len(self.masks) - 1

    def add_clique(self, size: int) -> List[int]:
        vertices = [self.add_vertex() for _ in range(size)]
        for i, u in enumerate(vertices):
            for v in vertices[i + 1:]:
                self.join(u, v)
        return vertices

    def join(self, u: int, v: int) -> None:
        self.masks[u] |= 1 << v
        self.masks[v] |= 1 << u

    def join_all(self, u: int, targets: Iterable[int]) -> None:
        for v in targets:
            self.join(u, v)

    def add_graph(self, graph: Graph) -> List[int]:
        offset = len(self.masks)
        self.masks.extend(mask << offset for mask in graph.adjacency)
        return list(range(offset, offset + graph.n))

    def build(self) -> Graph:
        return Graph(n=len(self.masks), adjacency=tuple(self.masks))


def _finish(
    builder: GraphBuilder,
    tag: ConstructionTag,
    m: int,
    k: int,
    core_ck: int,
    core_ck1: int,
    parameters: Dict,
    bound_name: str,
    bound_value: int,
    verify: bool,
) -> Tuple[ConstructionPlan, Graph]:
    """Pad with K_k blocks up to m k-cliques, then check the counts by enumeration."""
    padding = m - core_ck
    if padding < 0:
        raise CliqueBoundsError(f"{tag.value} overshoots m={m} with {core_ck} k-cliques")
    for _ in range(padding):
        builder.add_clique(k)
    graph = builder.build()
    verified: Optional[bool] = None
    if verify and GRAPH_CONFIG["verify_constructions"] and graph.n <= GRAPH_CONFIG["enumeration_cap"]:
        vector = clique_vector(graph, max_size=k + 1)
        verified = vector[k] == m and vector[k + 1] == core_ck1
        if not verified:
            raise CliqueBoundsError(
                f"{tag.value} for (m={m}, k={k}) enumerates to c_k={vector[k]}, "
                f"c_k+1={vector[k + 1]}; expected {m}, {core_ck1}"
            )
    plan = ConstructionPlan(
        base=tag, m=m, k=k, parameters=parameters, padding=padding,
        vertex_count=graph.n, predicted_ck=m, predicted_ck1=core_ck1,
        bound_name=bound_name, bound_value=bound_value, verified=verified,
    )
    logger.debug(f"{tag.value}(m={m}, k={k}): {graph.n} vertices, {padding} padding blocks")
    return plan, graph


def _check_args(m: int, k: int) -> None:
    if k < 2:
        raise DomainError(f"constructions need k >= 2, got {k}")
    if m < 1:
        raise DomainError(f"constructions need m >= 1, got {m}")


def _two_vertex_core(m: int, k: int) -> Tuple[GraphBuilder, List[int], int, int, Tuple[int, ...]]:
    """K_{n_k} plus a vertex v joined to its first n_{k-1} vertices (when that term exists)."""
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    builder = GraphBuilder()
    base = builder.add_clique(n_k)
    if n_k1 >= k - 1:
        v = builder.add_vertex()
        builder.join_all(v, base[:n_k1])
    return builder, base, n_k, n_k1, a_terms


def construction1(m: int, k: int, verify: bool = True) -> Tuple[ConstructionPlan, Graph]:
    """
    Attain lgbd(m, k) with K_{n_k}, a vertex on n_{k-1} of its vertices and a vertex on a_{k-1}.

    Applies when a_{k-2} = k-2 or there is no a_{k-2}.

    Raises:
        InapplicableConstructionError: If a_{k-2} exists and differs from k-2
    """
    _check_args(m, k)
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    if len(a_terms) >= 2 and a_terms[1] != k - 2:
        raise InapplicableConstructionError(
            "construction1", f"a_{k - 2} = {a_terms[1]} but k-2 = {k - 2}"
        )
    builder, base, n_k, n_k1, a_terms = _two_vertex_core(m, k)
    a_top = a_terms[0] if a_terms else 0
    if a_terms:
        u = builder.add_vertex()
        builder.join_all(u, base[:a_top])
    core_ck = binom(n_k, k) + binom(n_k1, k - 1) + binom(a_top, k - 1)
    core_ck1 = binom(n_k, k + 1) + binom(n_k1, k) + binom(a_top, k)
    parameters = {"n_k": n_k, "n_k1": n_k1, "a_terms": list(a_terms)}
    return _finish(builder, ConstructionTag.CONST1, m, k, core_ck, core_ck1,
                   parameters, "lgbd", lgbd(m, k), verify)


def construction2(m: int, k: int, verify: bool = True) -> Tuple[ConstructionPlan, Graph]:
    """
    Attain lgbd(m, k) with a second vertex u joined to v and sharing a_{k-2} neighbors with it.

    Needs k >= 3. A missing a_{k-2} counts as 0 shared neighbors. Applies when a_{k-3} = k-3 or
    is missing, and n_k + a_{k-2} >= n_{k-1} + a_{k-1}.

    Raises:
        InapplicableConstructionError: If either condition fails
    """
    _check_args(m, k)
    if k < 3:
        raise InapplicableConstructionError("construction2", f"needs k >= 3, got {k}")
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    a1 = a_terms[0] if a_terms else 0
    a2 = a_terms[1] if len(a_terms) > 1 else 0
    if len(a_terms) > 2 and a_terms[2] != k - 3:
        raise InapplicableConstructionError(
            "construction2", f"a_{k - 3} = {a_terms[2]} but k-3 = {k - 3}"
        )
    if n_k + a2 < n_k1 + a1:
        raise InapplicableConstructionError(
            "construction2", f"n_k + a_{k - 2} = {n_k + a2} < n_k1 + a_{k - 1} = {n_k1 + a1}"
        )
    builder, base, n_k, n_k1, a_terms = _two_vertex_core(m, k)
    if a_terms:
        v = len(base)
        u = builder.add_vertex()
        builder.join(u, v)
        # a2 shared neighbors inside v's neighborhood, the rest outside it
        builder.join_all(u, base[:a2])
        builder.join_all(u, base[n_k1:n_k1 + a1 - a2])
    core_ck = binom(n_k, k) + binom(n_k1, k - 1) + binom(a1, k - 1) + (binom(a2, k - 2) if a_terms else 0)
    core_ck1 = binom(n_k, k + 1) + binom(n_k1, k) + binom(a1, k) + (binom(a2, k - 1) if a_terms else 0)
    parameters = {"n_k": n_k, "n_k1": n_k1, "a_terms": list(a_terms)}
    return _finish(builder, ConstructionTag.CONST2, m, k, core_ck, core_ck1,
                   parameters, "lgbd", lgbd(m, k), verify)


def _spread(targets: Sequence[int], parts: Sequence[Sequence[int]]) -> List[int]:
    """Pick targets[i] vertices from distinct parts, largest demands on largest parts."""
    by_size = sorted(parts, key=len, reverse=True)
    if sum(1 for demand in targets if demand) > len(parts):
        raise InapplicableConstructionError(
            "construction3", f"{len(parts)} parts cannot host {len(targets)} nonempty classes"
        )
    chosen: List[int] = []
    for demand, part in zip(sorted(targets, reverse=True), by_size):
        if demand > len(part):
            raise InapplicableConstructionError(
                "construction3", f"cannot place {demand} vertices in a part of size {len(part)}"
            )
        chosen.extend(part[:demand])
    return chosen


def construction3(m: int, k: int, verify: bool = True) -> Tuple[ConstructionPlan, Graph]:
    """
    Attain smbd(m, k) with T_{a_k, n_k-1} plus a vertex on an induced T_{a_{k-1}, n_k-2}.

    Applies when smbd is defined and the colored term a_{k-2} is k-2 or missing.

    Raises:
        InapplicableConstructionError: If smbd is undefined or a_{k-2} differs from k-2
    """
    _check_args(m, k)
    n_k = cascade_terms(m, k)[0]
    if n_k == k:
        raise InapplicableConstructionError("construction3", f"smbd is undefined since n_k = k = {k}")
    terms = colored_terms(m, k, n_k - 1)
    if len(terms) > 2 and terms[2][0] != k - 2:
        raise InapplicableConstructionError(
            "construction3", f"colored a_{k - 2} = {terms[2][0]} but k-2 = {k - 2}"
        )
    a_k = terms[0][0]
    base_graph, parts = turan_graph_with_parts(a_k, n_k - 1)
    builder = GraphBuilder()
    builder.add_graph(base_graph)
    core_ck = turan_binom(a_k, k, n_k - 1)
    core_ck1 = turan_binom(a_k, k + 1, n_k - 1)
    if len(terms) > 1:
        a_k1 = terms[1][0]
        # n_k - 2 parts remain once a smallest part is left out
        usable = sorted(parts, key=len)[1:]
        chosen = _spread(turan_part_sizes(a_k1, n_k - 2), usable)
        w = builder.add_vertex()
        builder.join_all(w, (v - 1 for v in chosen))
        core_ck += turan_binom(a_k1, k - 1, n_k - 2)
        core_ck1 += turan_binom(a_k1, k, n_k - 2)
    parameters = {"n_k": n_k, "colored_terms": [list(t) for t in terms]}
    return _finish(builder, ConstructionTag.CONST3, m, k, core_ck, core_ck1,
                   parameters, "smbd", smbd(m, k), verify)


def conbd_witness(m: int, k: int, verify: bool = True) -> Tuple[ConstructionPlan, Graph]:
    """
    Graph whose (k+1)-clique count is conbd_lower(m, k), with exactly m k-cliques.

    K_{n_k}, one vertex on n_{k-1} of its vertices and one on a_{k-1} of them, padded.
    """
    _check_args(m, k)
    builder, base, n_k, n_k1, a_terms = _two_vertex_core(m, k)
    a_top = a_terms[0] if a_terms else 0
    if a_terms:
        u = builder.add_vertex()
        builder.join_all(u, base[:a_top])
    core_ck = binom(n_k, k) + binom(n_k1, k - 1) + binom(a_top, k - 1)
    core_ck1 = binom(n_k, k + 1) + binom(n_k1, k) + binom(a_top, k)
    parameters = {"n_k": n_k, "n_k1": n_k1, "a_terms": list(a_terms)}
    bound_value = conbd_lower(m, k) if k >= 3 else lgbd(m, k)
    return _finish(builder, ConstructionTag.LOWER, m, k, core_ck, core_ck1,
                   parameters, "conbd_lower", bound_value, verify)


CONSTRUCTIONS = {
    "1": construction1,
    "2": construction2,
    "3": construction3,
    "lower": conbd_witness,
}


def best_construction(m: int, k: int, verify: bool = True) -> Tuple[ConstructionPlan, Graph]:
    """
    First of Constructions 1, 2, 3 whose (k+1)-clique count reaches main_bound(m, k).

    Raises:
        InapplicableConstructionError: If none of them attains the main bound
    """
    target = main_bound(m, k).main
    reasons = []
    for name in ("1", "2", "3"):
        try:
            plan, graph = CONSTRUCTIONS[name](m, k, verify=False)
        except InapplicableConstructionError as e:
            reasons.append(e.reason)
            continue
        if plan.predicted_ck1 == target:
            return CONSTRUCTIONS[name](m, k, verify=verify)
        reasons.append(f"construction{name} gives {plan.predicted_ck1} < {target}")
    raise InapplicableConstructionError("auto", "; ".join(reasons))
