"""Face vectors, upper closures and the facet text format."""
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from cliquebounds.config import COMPLEX_CONFIG
from cliquebounds.core.binomial import shadow_size
from cliquebounds.core.representations import cascade_terms
from cliquebounds.complexes.revlex import check_revlex_specs, is_r_permissible
from cliquebounds.errors import DomainError, ResourceLimitError
from cliquebounds.models.complexes import Complex, Face

import logging
logger = logging.getLogger(__name__)


def faces_by_size(complex_: Complex) -> List[Set[Face]]:
    """
    Materialize every face of the complex, grouped by cardinality.

    Raises:
        ResourceLimitError: If more faces than the configured cap would be stored
    """
    cap = COMPLEX_CONFIG["face_cap"]
    levels: List[Set[Face]] = [set() for _ in range(complex_.dimension + 1)]
    levels[0].add(())
    stored = 1
    for facet in complex_.facets:
        for size in range(1, len(facet) + 1):
            level = levels[size]
            before = len(level)
            level.update(combinations(facet, size))
            stored += len(level) - before
        if stored > cap:
            raise ResourceLimitError(f"complex has more than {cap} faces")
    return levels


def face_vector(complex_: Complex) -> List[int]:
    """
    Number of faces of each cardinality, index 0 counting the empty face.

    The empty complex has face vector [1].
    """
    return [len(level) for level in faces_by_size(complex_)]


def revlex_face_counts(specs: Sequence[Tuple[int, int]]) -> List[int]:
    """
    Face vector of the multi rev-lex complex of `specs` without building it.

    Every level count is the largest shadow reaching that level, since the
    shadows of rev-lex initial segments are nested initial segments.
    """
    ordered = check_revlex_specs(specs)
    top = max((i for i, m in ordered if m), default=0)
    counts = [1] + [0] * top
    for i, m in ordered:
        if not m:
            continue
        terms = cascade_terms(m, i)
        for level in range(1, i + 1):
            counts[level] = max(counts[level], shadow_size(terms, level))
    return counts


def upper_closure_count(faces: Iterable[Sequence[int]], r: Optional[int] = None) -> int:
    """
    Count the (k+1)-sets all of whose k-subsets belong to the family `faces`.

    This is the largest (k+1)-face count a complex can have on top of the given
    k-faces. With `r`, only r-permissible (k+1)-sets are counted.

    Args:
        faces: A family of k-sets (k >= 1)
        r: Optional color count

    Returns:
        Number of such (k+1)-sets
    """
    family = {tuple(sorted(face)) for face in faces}
    if not family:
        return 0
    sizes = {len(face) for face in family}
    if len(sizes) != 1 or 0 in sizes:
        raise DomainError("upper closure needs a non-empty family of equal-size sets")
    k = sizes.pop()
    vertices = sorted({v for face in family for v in face})
    total = 0
    for face in family:
        for v in vertices:
            # each (k+1)-set is reached once, from the subset missing its maximum
            if v <= face[-1]:
                continue
            candidate = face + (v,)
            if r is not None and not is_r_permissible(candidate, r):
                continue
            if all(sub in family for sub in combinations(candidate, k)):
                total += 1
    return total


def facets_to_text(complex_: Complex) -> str:
    """One facet per line, vertices ascending and space separated."""
    return "".join(" ".join(str(v) for v in facet) + "\n" for facet in complex_.facets)


def facets_from_text(text: str) -> Complex:
    """Parse the line-per-facet format; blank lines and '#' comments are skipped."""
    faces = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            faces.append(tuple(int(token) for token in line.split()))
        except ValueError as e:
            raise DomainError(f"line {number}: {e}") from e
    return Complex.from_faces(faces)
