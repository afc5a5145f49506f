"""Exact binomial coefficients, cascade sums and Turán binomials."""
import math
from functools import lru_cache
from typing import Iterable, List, Sequence

from cliquebounds.errors import DomainError

import logging
logger = logging.getLogger(__name__)


def binom(n: int, k: int) -> int:
    """Return C(n, k), taken to be 0 when k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def r_sum(k: int, terms: Sequence[int]) -> int:
    """
    Evaluate the cascade sum r_k(n_k, n_{k-1}, ..., n_{k-s}).

    Args:
        k: Index paired with the leading term
        terms: Terms n_k, n_{k-1}, ... (the i-th term is paired with k - i)

    Returns:
        Sum of C(terms[i], k - i); 0 for an empty list
    """
    return sum(binom(n, k - i) for i, n in enumerate(terms))


def shadow_size(terms: Sequence[int], level: int) -> int:
    """
    Size of the level-`level` shadow of the rev-lex initial segment with cascade `terms`.

    The segment of r_k(terms) k-sets has exactly r_level(terms) subsets of size
    `level` for every level <= k; level = k - 1 is the Kruskal-Katona shadow.
    """
    return r_sum(level, terms)


def turan_part_sizes(n: int, r: int) -> List[int]:
    """Part sizes of T_{n,r}: n mod r parts of size ceil(n/r), the rest floor(n/r)."""
    if r < 1:
        raise DomainError(f"Turán graph needs at least one part, got r={r}")
    q, rem = divmod(n, r)
    return [q + 1] * rem + [q] * (r - rem)


def elementary_symmetric(values: Iterable[int], k: int) -> int:
    """Degree-k elementary symmetric polynomial of `values`, by the usual DP over e_0..e_k."""
    if k < 0:
        return 0
    e = [1] + [0] * k
    for x in values:
        if x == 0:
            continue
        for j in range(k, 0, -1):
            e[j] += x * e[j - 1]
    return e[k]


@lru_cache(maxsize=65536)
def turan_binom(n: int, k: int, r: int) -> int:
    """
    Number of k-cliques of the Turán graph T_{n,r}.

    Args:
        n: Vertex count (>= 0)
        k: Clique size (>= 0)
        r: Part count (>= 1, or 0 for the empty graph)

    Returns:
        e_k of the part sizes; C(n, k) when r >= n, 0 when k > r

    Raises:
        DomainError: On negative arguments or r = 0 with n > 0
    """
    if n < 0 or k < 0 or r < 0:
        raise DomainError(f"turan_binom needs non-negative arguments, got ({n}, {k}, {r})")
    if r == 0:
        if n > 0:
            raise DomainError(f"cannot split {n} vertices into 0 parts")
        return binom(0, k)
    if r >= n:
        return binom(n, k)
    if k > r:
        return 0
    return elementary_symmetric(turan_part_sizes(n, r), k)
