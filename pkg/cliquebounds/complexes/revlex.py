"""Rev-lex order on k-sets and the rev-lex complexes built from it."""
from itertools import count, islice
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from cliquebounds.config import COMPLEX_CONFIG
from cliquebounds.core.binomial import binom, shadow_size
from cliquebounds.core.representations import cascade_terms, largest_fitting
from cliquebounds.errors import DomainError, ResourceLimitError
from cliquebounds.models.complexes import Complex, Face, FaceSet

import logging
logger = logging.getLogger(__name__)


def revlex_precedes(a: Iterable[int], b: Iterable[int]) -> bool:
    """
    True iff A comes before B in rev-lex order, i.e. max(A xor B) lies in B.

    Raises:
        DomainError: If the sets have different cardinalities
    """
    set_a, set_b = set(a), set(b)
    if len(set_a) != len(set_b):
        raise DomainError(f"rev-lex compares sets of equal size, got {len(set_a)} and {len(set_b)}")
    difference = set_a ^ set_b
    if not difference:
        return False
    return max(difference) in set_b


def revlex_rank(face: Iterable[int]) -> int:
    """0-based rev-lex rank of a set of positive integers: sum of C(a_i - 1, i)."""
    ordered = sorted(face)
    if ordered and ordered[0] < 1:
        raise DomainError(f"vertices are positive integers, got {ordered}")
    return sum(binom(v - 1, i) for i, v in enumerate(ordered, start=1))


def revlex_unrank(t: int, k: int) -> Face:
    """
    The k-set at 0-based rev-lex rank t.

    Args:
        t: Rank (>= 0)
        k: Set size (>= 1)

    Returns:
        Strictly increasing vertex tuple
    """
    if t < 0 or k < 1:
        raise DomainError(f"revlex_unrank needs t >= 0 and k >= 1, got t={t}, k={k}")
    vertices: List[int] = []
    remainder = t
    hi: Optional[int] = None
    for i in range(k, 0, -1):
        c = largest_fitting(lambda x, i=i: binom(x, i), remainder, lo=i - 1, hi=hi)
        vertices.append(c + 1)
        remainder -= binom(c, i)
        hi = c
    return tuple(reversed(vertices))


def iter_revlex(k: int, n: Optional[int] = None) -> Iterator[Face]:
    """k-subsets of {1..n} in rev-lex order; of all positive integers when n is None."""
    if k == 0:
        yield ()
        return
    tops = count(k) if n is None else range(k, n + 1)
    for top in tops:
        for rest in iter_revlex(k - 1, top - 1):
            yield rest + (top,)


def _check_cap(m: int) -> None:
    if m > COMPLEX_CONFIG["face_cap"]:
        raise ResourceLimitError(
            f"{m} facets exceed the face cap {COMPLEX_CONFIG['face_cap']}; "
            "use revlex_face_counts for counts"
        )


def revlex_face_set(k: int, m: int) -> FaceSet:
    """The first m k-sets in rev-lex order."""
    if k < 1 or m < 0:
        raise DomainError(f"revlex_face_set needs k >= 1 and m >= 0, got k={k}, m={m}")
    _check_cap(m)
    return FaceSet(k=k, faces=tuple(islice(iter_revlex(k), m)))


def revlex_complex(k: int, m: int) -> Complex:
    """C_k(m): the pure complex whose facets are the first m k-sets."""
    return Complex(facets=revlex_face_set(k, m).faces)


def check_revlex_specs(specs: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """
    Validate (i_j, m_j) specs of a multi rev-lex complex.

    The i_j must increase and each m_{j+1} i_{j+1}-sets must have an i_j-shadow
    of at most m_j sets, otherwise the union would exceed the m_j count.
    """
    ordered = [(int(i), int(m)) for i, m in specs]
    for i, m in ordered:
        if i < 1 or m < 0:
            raise DomainError(f"pair ({i}, {m}) needs i >= 1 and m >= 0")
    for (i_low, m_low), (i_high, m_high) in zip(ordered, ordered[1:]):
        if i_high <= i_low:
            raise DomainError(f"face sizes must increase, got {i_low} then {i_high}")
        if m_high and shadow_size(cascade_terms(m_high, i_high), i_low) > m_low:
            raise DomainError(
                f"{m_high} {i_high}-faces force more than {m_low} {i_low}-faces "
                "(Kruskal-Katona inequality fails)"
            )
    return ordered


def covered_prefix(ordered: Sequence[Tuple[int, int]], index: int) -> int:
    """How many of the first i_index-sets lie in the shadow of the larger specs."""
    i = ordered[index][0]
    return max(
        (shadow_size(cascade_terms(m, size), i) for size, m in ordered[index + 1:] if m),
        default=0,
    )


def multi_revlex_complex(specs: Sequence[Tuple[int, int]]) -> Complex:
    """
    Union of C_{i_1}(m_1), C_{i_2}(m_2), ... with exactly m_j faces of size i_j.

    Raises:
        DomainError: If the specs violate the Kruskal-Katona inequalities
    """
    ordered = check_revlex_specs(specs)
    facets: List[Face] = []
    for index, (i, m) in enumerate(ordered):
        _check_cap(m)
        # shadows of initial segments are initial segments, so the facets of
        # this size are exactly the sets past the covered prefix
        start = covered_prefix(ordered, index)
        facets.extend(islice(iter_revlex(i), start, m))
    logger.debug(f"multi rev-lex complex {ordered}: {len(facets)} facets")
    return Complex(facets=tuple(facets))


def is_r_permissible(face: Iterable[int], r: int) -> bool:
    """True iff no two vertices of the face are congruent mod r."""
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    vertices = list(face)
    return len({v % r for v in vertices}) == len(vertices)


def iter_colored_revlex(k: int, r: int) -> Iterator[Face]:
    """r-permissible k-sets in rev-lex order."""
    return (face for face in iter_revlex(k) if is_r_permissible(face, r))


def colored_revlex_complex(k: int, m: int, r: int) -> Complex:
    """
    Pure complex on the first m r-permissible k-sets.

    Coloring vertex v by v mod r is proper on every face.
    """
    if k < 1 or m < 0:
        raise DomainError(f"colored_revlex_complex needs k >= 1 and m >= 0, got k={k}, m={m}")
    if r < k:
        raise DomainError(f"colored rev-lex complex needs r >= k, got r={r}, k={k}")
    _check_cap(m)
    return Complex(facets=tuple(islice(iter_colored_revlex(k, r), m)))
