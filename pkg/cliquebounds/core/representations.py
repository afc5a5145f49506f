"""Greedy decompositions into cascade, lgbd-form and colored representations."""
from itertools import count
from typing import Callable, Iterator, List, Optional, Tuple

from cliquebounds.core.binomial import binom, r_sum, turan_binom
from cliquebounds.errors import DomainError
from cliquebounds.models.representations import CascadeRep, ColoredRep, LgbdRep

import logging
logger = logging.getLogger(__name__)


def largest_fitting(value_at: Callable[[int], int], target: int, lo: int, hi: Optional[int] = None) -> int:
    """
    Largest n >= lo with value_at(n) <= target, for non-decreasing value_at.

    Args:
        value_at: Monotone function of n
        target: Value that must not be exceeded
        lo: Known feasible point (value_at(lo) <= target)
        hi: Known infeasible point (value_at(hi) > target); found by doubling if omitted

    Returns:
        The largest feasible n
    """
    if hi is None:
        hi = max(2 * lo, lo + 1)
        while value_at(hi) <= target:
            lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if value_at(mid) <= target:
            lo = mid
        else:
            hi = mid
    return lo


def cascade_terms(m: int, k: int) -> Tuple[int, ...]:
    """
    Terms of the k-cascade representation of m, without building a model.

    Each term is the largest n with C(n, j) not above the remainder; the
    remainder after term n is below C(n, j-1), so n bounds the next search.
    """
    if k < 1:
        raise DomainError(f"cascade representation needs k >= 1, got {k}")
    if m < 1:
        raise DomainError(f"cascade representation needs m >= 1, got {m}")
    terms: List[int] = []
    remainder = m
    hi: Optional[int] = None
    for j in range(k, 0, -1):
        if remainder == 0:
            break
        if j == 1:
            n = remainder
        else:
            n = largest_fitting(lambda x, j=j: binom(x, j), remainder, lo=j, hi=hi)
        terms.append(n)
        remainder -= binom(n, j)
        hi = n
    return tuple(terms)


def kk_rep(m: int, k: int) -> CascadeRep:
    """
    Compute the unique k-cascade representation of m.

    Args:
        m: Positive integer
        k: Index of the leading binomial (>= 1)

    Returns:
        CascadeRep with r_k(terms) = m

    Raises:
        DomainError: If m < 1 or k < 1
    """
    return CascadeRep(k=k, terms=cascade_terms(m, k))


def lgbd_parts(m: int, k: int) -> Tuple[int, int, Tuple[int, ...]]:
    """(n_k, n_{k-1} or the sentinel k-2, a_terms) for m at dimension k."""
    if k < 2:
        raise DomainError(f"lgbd representation needs k >= 2, got {k}")
    terms = cascade_terms(m, k)
    n_k = terms[0]
    n_k1 = terms[1] if len(terms) > 1 else k - 2
    q = m - r_sum(k, [n_k, n_k1])
    a_terms = cascade_terms(q, k - 1) if q else ()
    return n_k, n_k1, a_terms


def lgbd_rep(m: int, k: int) -> LgbdRep:
    """
    Split m into r_k(n_k, n_{k-1}) plus the (k-1)-cascade of what remains.

    Raises:
        DomainError: If m < 1 or k < 2
    """
    n_k, n_k1, a_terms = lgbd_parts(m, k)
    return LgbdRep(k=k, n_k=n_k, n_k1=n_k1, a_terms=a_terms)


def colored_terms(m: int, k: int, r: int) -> Tuple[Tuple[int, int], ...]:
    """Pairs (n_{k-i}, r-i) of the colored representation of m."""
    if k < 1 or r < k:
        raise DomainError(f"colored representation needs r >= k >= 1, got k={k}, r={r}")
    if m < 1:
        raise DomainError(f"colored representation needs m >= 1, got {m}")
    pairs: List[Tuple[int, int]] = []
    remainder = m
    hi: Optional[int] = None
    for i in range(k):
        if remainder == 0:
            break
        j, color = k - i, r - i
        if j == 1:
            n = remainder
        else:
            n = largest_fitting(lambda x, j=j, c=color: turan_binom(x, j, c), remainder, lo=j, hi=hi)
        pairs.append((n, color))
        remainder -= turan_binom(n, j, color)
        # the next term lies strictly below n - floor(n / color)
        hi = n - n // color
    if remainder:
        raise DomainError(f"color budget exhausted with {remainder} left for m={m}, k={k}, r={r}")
    return tuple(pairs)


def colored_rep(m: int, k: int, r: int) -> ColoredRep:
    """
    Compute the Turán-binomial representation of m with r colors.

    Args:
        m: Positive integer
        k: Clique size paired with the leading term
        r: Color count paired with the leading term (r >= k)

    Returns:
        ColoredRep whose terms satisfy the gap condition
    """
    return ColoredRep(k=k, r=r, terms=colored_terms(m, k, r))


def enumerate_cascades(k: int, limit: int) -> Iterator[Tuple[int, Tuple[int, ...]]]:
    """
    Yield (value, terms) for every valid k-cascade whose value is at most limit.

    Used for exhaustive uniqueness checks; each value appears once per valid
    sequence, so a value listed twice would disprove uniqueness.
    """
    def extend(prefix: Tuple[int, ...], j: int, total: int, upper: Optional[int]):
        if j < 1:
            return
        candidates = count(j) if upper is None else range(j, upper)
        for n in candidates:
            subtotal = total + binom(n, j)
            if subtotal > limit:
                break
            terms = prefix + (n,)
            yield subtotal, terms
            yield from extend(terms, j - 1, subtotal, n)

    yield from extend((), k, 0, None)
