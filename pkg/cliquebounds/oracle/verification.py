"""Clique-vector sweeps, extremal tables and empirical checks of the bounds."""
import asyncio
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional

from cliquebounds.config import ORACLE_CONFIG
from cliquebounds.core.bounds import main_bound, nonconsec_bound
from cliquebounds.core.representations import cascade_terms
from cliquebounds.errors import CounterexampleError, DomainError
from cliquebounds.models.graph import Graph
from cliquebounds.models.oracle import (
    CensusEntry,
    CliqueCensus,
    ConbdStatus,
    ExtremalRow,
    ExtremalTable,
    NonexistenceReport,
    NonexistenceStatus,
    TheoremReport,
    Violation,
)
from cliquebounds.oracle.enumeration import ChunkCensus, census_chunk, check_vertex_cap, chunk_bounds

import logging
logger = logging.getLogger(__name__)


def _merge(target: ChunkCensus, part: ChunkCensus) -> None:
    """Keep the lowest-index witness per clique vector."""
    for counts, (index, masks) in part.items():
        if counts not in target or index < target[counts][0]:
            target[counts] = (index, masks)


async def sweep_clique_vectors(
    n: int,
    workers: Optional[int] = None,
    prune: Optional[bool] = None,
    chunk_count: Optional[int] = None,
    allow_long_run: bool = False,
) -> CliqueCensus:
    """
    Collect every clique vector of a labeled graph on n vertices.

    The edge-subset range is cut into contiguous chunks that run concurrently,
    in threads when workers is 1 and in a process pool otherwise. Witnesses
    are the lowest enumeration index per vector, so the result does not
    depend on chunking or worker count.

    Args:
        n: Vertex count
        workers: Process count (default from ORACLE_CONFIG)
        prune: Degree-order pruning (default from ORACLE_CONFIG)
        chunk_count: Number of index ranges (default from ORACLE_CONFIG)
        allow_long_run: Permit n above the soft cap

    Returns:
        CliqueCensus sorted by clique vector
    """
    check_vertex_cap(n, allow_long_run)
    workers = ORACLE_CONFIG["workers"] if workers is None else workers
    prune = ORACLE_CONFIG["prune_by_degree"] if prune is None else prune
    chunk_count = ORACLE_CONFIG["chunk_count"] if chunk_count is None else chunk_count
    if workers < 1 or chunk_count < 1:
        raise DomainError(f"workers and chunk_count must be positive, got {workers}, {chunk_count}")

    total = 1 << (n * (n - 1) // 2)
    bounds = chunk_bounds(total, chunk_count)
    semaphore = asyncio.Semaphore(ORACLE_CONFIG["concurrency_limit"])
    loop = asyncio.get_running_loop()
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    done = 0

    async def run_chunk(start: int, stop: int):
        nonlocal done
        async with semaphore:
            if executor is None:
                result = await asyncio.to_thread(census_chunk, n, start, stop, prune)
            else:
                result = await loop.run_in_executor(executor, census_chunk, n, start, stop, prune)
        done += 1
        if done % ORACLE_CONFIG["log_every_chunks"] == 0 or done == len(bounds):
            logger.info(f"sweep n={n}: {done}/{len(bounds)} chunks")
        return result

    logger.info(f"Sweeping {total} labeled graphs on {n} vertices in {len(bounds)} chunks (prune={prune})")
    try:
        results = await asyncio.gather(*(run_chunk(start, stop) for start, stop in bounds))
    finally:
        if executor is not None:
            executor.shutdown()

    merged: ChunkCensus = {}
    counted = 0
    for chunk_counted, part in results:
        counted += chunk_counted
        _merge(merged, part)
    entries = [
        CensusEntry(counts=counts, index=index, witness6=Graph(n=n, adjacency=masks).to_graph6())
        for counts, (index, masks) in sorted(merged.items())
    ]
    stats = {"graphs": total, "counted": counted, "pruned": total - counted, "vectors": len(entries)}
    logger.info(f"sweep n={n} stats: {stats}")
    return CliqueCensus(n=n, pruned=prune, total_graphs=total, graphs_counted=counted, entries=entries)


def _has_leading_clique(entry: CensusEntry, m: int, k: int) -> bool:
    """Whether the graph contains an n_k-clique, n_k the leading cascade term of m."""
    return entry.clique_number >= cascade_terms(m, k)[0]


def table_from_census(census: CliqueCensus, k: int) -> ExtremalTable:
    """
    Extremal table for clique size k; graphs with fewer vertices appear padded
    with isolated vertices, so the census on n_max vertices covers them.
    """
    if k < 2:
        raise DomainError(f"extremal tables need k >= 2, got {k}")
    best: Dict[int, Dict[str, CensusEntry]] = {}

    def better(current: Optional[CensusEntry], entry: CensusEntry) -> bool:
        if current is None:
            return True
        key_new, key_old = entry.count(k + 1), current.count(k + 1)
        return key_new > key_old or (key_new == key_old and entry.index < current.index)

    for entry in census.entries:
        m = entry.count(k)
        if m == 0:
            continue
        cell = best.setdefault(m, {})
        slot = "with" if _has_leading_clique(entry, m, k) else "without"
        for name in ("all", slot):
            if better(cell.get(name), entry):
                cell[name] = entry

    rows: List[ExtremalRow] = []
    for m in sorted(best):
        cell = best[m]
        report = main_bound(m, k)
        with_entry, without_entry = cell.get("with"), cell.get("without")
        max_with = with_entry.count(k + 1) if with_entry else None
        rows.append(ExtremalRow(
            m=m,
            max_all=cell["all"].count(k + 1),
            max_with_clique=max_with,
            max_without=without_entry.count(k + 1) if without_entry else None,
            witness6=cell["all"].witness6,
            witness_with6=with_entry.witness6 if with_entry else None,
            witness_without6=without_entry.witness6 if without_entry else None,
            lgbd=report.lgbd,
            smbd=report.smbd,
            oldbd=report.oldbd,
            main=report.main,
            conbd_status=ConbdStatus.EXACT if max_with == report.lgbd else ConbdStatus.LOWER_BOUND_ONLY,
        ))
    return ExtremalTable(k=k, n_max=census.n, rows=rows)


async def build_extremal_table(k: int, n_max: int, census: Optional[CliqueCensus] = None, **sweep_options) -> ExtremalTable:
    """Exact conditional maxima per m over all graphs on at most n_max vertices."""
    if census is None:
        census = await sweep_clique_vectors(n_max, **sweep_options)
    elif census.n != n_max:
        raise DomainError(f"census covers n={census.n}, table asked for n_max={n_max}")
    return table_from_census(census, k)


def check_main_theorem(census: CliqueCensus, k: int, raise_on_violation: bool = False) -> TheoremReport:
    """
    Check c_{k+1} against lgbd (graphs with an n_k-clique) or smbd (without) for every vector.

    Raises:
        CounterexampleError: On the first violation when raise_on_violation is set
    """
    violations: List[Violation] = []
    best: Dict[int, int] = {}
    checked = 0
    for entry in census.entries:
        m = entry.count(k)
        if m == 0:
            continue
        checked += 1
        ck1 = entry.count(k + 1)
        best[m] = max(best.get(m, 0), ck1)
        report = main_bound(m, k)
        if _has_leading_clique(entry, m, k):
            name, value = "lgbd", report.lgbd
        elif report.smbd is not None:
            name, value = "smbd", report.smbd
        else:
            name, value = "main", report.main
        if ck1 > value:
            violation = Violation(m=m, ck1=ck1, bound_name=name, bound_value=value, witness6=entry.witness6)
            logger.error(f"k={k} m={m}: c_k+1={ck1} exceeds {name}={value} ({entry.witness6})")
            if raise_on_violation:
                raise CounterexampleError(
                    f"graph with {m} {k}-cliques has {ck1} > {name}={value}", entry.witness6
                )
            violations.append(violation)
    tight = sorted(m for m, value in best.items() if value == main_bound(m, k).main)
    return TheoremReport(k=k, n_max=census.n, vectors_checked=checked, violations=violations, tight_rows=tight)


async def verify_main_theorem(
    k: int,
    n_max: int,
    census: Optional[CliqueCensus] = None,
    raise_on_violation: bool = False,
    **sweep_options,
) -> TheoremReport:
    """Check the main bound on every graph with at most n_max vertices."""
    if k < 1:
        raise DomainError(f"k must be at least 1, got {k}")
    logger.info("=" * 70)
    logger.info(f"MAIN BOUND CHECK: k={k}, graphs on {n_max} vertices")
    logger.info("=" * 70)

    logger.debug("-" * 70)
    logger.info("STEP 1: Sweep Clique Vectors")
    logger.debug("-" * 70)
    if census is None:
        census = await sweep_clique_vectors(n_max, **sweep_options)
    else:
        logger.info(f"Using given census of {len(census.entries)} vectors")

    logger.debug("-" * 70)
    logger.info("STEP 2: Compare Against lgbd / smbd")
    logger.debug("-" * 70)
    report = check_main_theorem(census, k, raise_on_violation)

    logger.info("=" * 70)
    logger.info(
        f"main bound k={k} n_max={n_max}: {report.vectors_checked} vectors, "
        f"{len(report.violations)} violations, {len(report.tight_rows)} tight rows"
    )
    logger.info("=" * 70)
    return report


async def verify_nonexistence(
    k: int,
    i: int,
    m: int,
    target: int,
    n_max: Optional[int] = None,
    census: Optional[CliqueCensus] = None,
    **sweep_options,
) -> NonexistenceReport:
    """
    Decide whether some graph has c_k = m and c_{k+i} = target.

    When the bound on c_{k+i} is already below target the answer is certified
    without enumeration; otherwise graphs on n_max vertices are searched.
    """
    bound = nonconsec_bound(m, k, i)
    if bound < target:
        logger.info(f"c_{k + i} <= {bound} < {target} for m={m}: certified by the bound")
        return NonexistenceReport(
            k=k, step=i, m=m, target=target, bound=bound,
            status=NonexistenceStatus.CERTIFIED_BY_BOUND,
        )
    if census is None:
        n_max = ORACLE_CONFIG["default_n_max"] if n_max is None else n_max
        census = await sweep_clique_vectors(n_max, **sweep_options)
    witness = next(
        (e for e in sorted(census.entries, key=lambda e: e.index)
         if e.count(k) == m and e.count(k + i) == target),
        None,
    )
    return NonexistenceReport(
        k=k, step=i, m=m, target=target, n_max=census.n, bound=bound,
        status=NonexistenceStatus.EXISTS if witness else NonexistenceStatus.NONE_FOUND,
        witness6=witness.witness6 if witness else None,
    )
