"""Bound functions on clique counts and the statistics built from them."""
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from cliquebounds.config import STATS_CONFIG
from cliquebounds.core.binomial import binom, r_sum, turan_binom
from cliquebounds.core.representations import cascade_terms, colored_terms, lgbd_parts
from cliquebounds.errors import DomainError
from cliquebounds.models.bounds import BoundReport, NonconsecReport, RatioStats, Winner

import logging
logger = logging.getLogger(__name__)


def _check_args(m: int, k: int, min_k: int = 1) -> None:
    if k < min_k:
        raise DomainError(f"k must be at least {min_k}, got {k}")
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")


def oldbd(m: int, k: int) -> int:
    """Kruskal-Katona bound: the k-cascade of m with every index moved up by one."""
    _check_args(m, k)
    if m == 0:
        return 0
    return r_sum(k + 1, cascade_terms(m, k))


def oldbd_iterate(m: int, k: int, steps: int) -> int:
    """oldbd applied `steps` times, moving from dimension k to k + steps."""
    value = m
    for step in range(steps):
        value = oldbd(value, k + step)
    return value


def lgbd(m: int, k: int) -> int:
    """
    Bound for graphs that contain an n_k-clique.

    For k < 3 this coincides with oldbd and is evaluated that way.
    """
    _check_args(m, k)
    if m == 0:
        return 0
    if k < 3:
        return oldbd(m, k)
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    return r_sum(k + 1, [n_k, n_k1]) + r_sum(k, a_terms)


def kalai_eckhoff_bound(m: int, k: int, r: int) -> int:
    """
    Bound for graphs with m k-cliques and no (r+1)-clique.

    Args:
        m: Number of k-cliques
        k: Clique size (>= 1)
        r: Largest clique size allowed (>= k)

    Returns:
        The colored representation of m evaluated one clique size higher
    """
    _check_args(m, k)
    if r < k:
        raise DomainError(f"kalai_eckhoff_bound needs r >= k, got r={r}, k={k}")
    if m == 0:
        return 0
    return sum(
        turan_binom(n, k - i + 1, color)
        for i, (n, color) in enumerate(colored_terms(m, k, r))
    )


def smbd(m: int, k: int) -> Optional[int]:
    """
    Bound for graphs without an n_k-clique; None when n_k = k (undefined).
    """
    _check_args(m, k)
    if m == 0:
        return 0
    n_k = cascade_terms(m, k)[0]
    if n_k == k:
        return None
    return kalai_eckhoff_bound(m, k, n_k - 1)


def main_bound(m: int, k: int) -> BoundReport:
    """
    Evaluate every bound for (m, k) and pick the main-theorem maximum.

    An undefined smbd loses to lgbd; equal values are reported as a tie.
    """
    old, lg, sm = oldbd(m, k), lgbd(m, k), smbd(m, k)
    if sm is None or lg > sm:
        winner = Winner.LGBD
    elif sm > lg:
        winner = Winner.SMBD
    else:
        winner = Winner.TIE
    logger.debug(f"main_bound(m={m}, k={k}): old={old} lg={lg} sm={sm}")
    return BoundReport(
        m=m, k=k, oldbd=old, lgbd=lg, smbd=sm,
        main=max(lg, sm or 0), winner=winner,
    )


def nonconsec_components(m: int, k: int, i: int) -> Tuple[int, Optional[int]]:
    """
    Both components of the bound on (k+i)-cliques given m k-cliques.

    Returns:
        (lgbd-form component, colored component or None when n_k = k)
    """
    _check_args(m, k)
    if i < 1:
        raise DomainError(f"dimension step must be at least 1, got {i}")
    if m == 0:
        return 0, 0
    if k >= 2:
        n_k, n_k1, a_terms = lgbd_parts(m, k)
        first = r_sum(k + i, [n_k, n_k1]) + r_sum(k + i - 1, a_terms)
    else:
        first = binom(m, 1 + i)
    n_k = cascade_terms(m, k)[0]
    if n_k == k:
        return first, None
    # one-shot colored form; iterating smbd can give a different value
    second = sum(
        turan_binom(n, k - j + i, color)
        for j, (n, color) in enumerate(colored_terms(m, k, n_k - 1))
    )
    return first, second


def nonconsec_bound(m: int, k: int, i: int) -> int:
    """Upper bound on the (k+i)-clique count of a graph with m k-cliques."""
    first, second = nonconsec_components(m, k, i)
    return max(first, second or 0)


def nonconsec_report(m: int, k: int, i: int) -> NonconsecReport:
    first, second = nonconsec_components(m, k, i)
    return NonconsecReport(
        m=m, k=k, step=i,
        lgbd_component=first, colored_component=second,
        bound=max(first, second or 0),
    )


def iterated_lgbd(m: int, k: int, i: int) -> int:
    """lgbd applied i times, from dimension k up to k + i."""
    value = m
    for step in range(i):
        value = lgbd(value, k + step)
    return value


def iterated_smbd(m: int, k: int, i: int) -> Optional[int]:
    """smbd applied i times; None as soon as one step is undefined."""
    value: Optional[int] = m
    for step in range(i):
        value = smbd(value, k + step)
        if value is None:
            return None
    return value


def strictness_gap(m: int, k: int) -> Optional[int]:
    """oldbd - smbd, positive whenever smbd is defined and m >= 1."""
    sm = smbd(m, k)
    if sm is None:
        return None
    return oldbd(m, k) - sm


def conbd_lower(m: int, k: int) -> int:
    """
    Constructive lower bound r_{k+1}(n_k, n_{k-1}) + r_k(a_{k-1}).

    It counts the (k+1)-cliques of K_{n_k} plus one vertex joined to n_{k-1}
    of its vertices and one joined to a_{k-1} of them.
    """
    _check_args(m, k, min_k=3)
    if m < 1:
        raise DomainError("conbd_lower needs m >= 1")
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    top = binom(a_terms[0], k) if a_terms else 0
    return r_sum(k + 1, [n_k, n_k1]) + top


def ratio_proxy(m: int, k: int) -> Fraction:
    """
    (lgbd - conbd_lower) / (oldbd - conbd_lower), or 1 when oldbd = conbd_lower.

    Upper-bounds the ratio defined through the true conbd.
    """
    _check_args(m, k, min_k=3)
    old, low = oldbd(m, k), conbd_lower(m, k)
    if old <= low:
        return Fraction(1)
    return Fraction(lgbd(m, k) - low, old - low)


def ratbound_rhs(m: int, k: int) -> Optional[Fraction]:
    """k^2 / (n_{k-2} - k^2) when the third cascade term exceeds k^2, else None."""
    _check_args(m, k, min_k=3)
    terms = cascade_terms(m, k)
    if len(terms) < 3 or terms[2] <= k * k:
        return None
    return Fraction(k * k, terms[2] - k * k)


def ratio_stats(m: int, k: int) -> RatioStats:
    return RatioStats(
        m=m, k=k,
        oldbd=oldbd(m, k),
        lgbd=lgbd(m, k),
        conbd_lower=conbd_lower(m, k),
        ratio_proxy=ratio_proxy(m, k),
        ratbound_rhs=ratbound_rhs(m, k),
    )


def lgbd_wins(m: int, k: int) -> bool:
    """True when lgbd(m, k) > smbd(m, k), an undefined smbd counting as a win."""
    sm = smbd(m, k)
    return sm is None or lgbd(m, k) > sm


def fj_series(js: Iterable[int], k: int) -> Dict[int, Fraction]:
    """
    f_j for every j in `js`, from a single scan over m = 1..max(js).

    Returns:
        Mapping j -> fraction of m <= j with lgbd(m, k) > smbd(m, k)
    """
    if k < 3:
        raise DomainError(f"f_j is defined for k >= 3, got {k}")
    grid = sorted(set(js))
    if not grid or grid[0] < 1:
        raise DomainError("f_j needs j >= 1")
    log_every = STATS_CONFIG["log_every"]
    results: Dict[int, Fraction] = {}
    wins = 0
    pending: List[int] = list(grid)
    for m in range(1, grid[-1] + 1):
        if lgbd_wins(m, k):
            wins += 1
        while pending and pending[0] == m:
            results[pending.pop(0)] = Fraction(wins, m)
        if m % log_every == 0:
            logger.info(f"f_j scan k={k}: {m}/{grid[-1]} values, {wins} lgbd wins")
    return results


def fj_statistic(j: int, k: int) -> Fraction:
    """Fraction of m in [1, j] for which lgbd beats smbd."""
    return fj_series([j], k)[j]
