"""Rev-lex order, rev-lex complexes and face counting."""
from .revlex import (
    colored_revlex_complex,
    is_r_permissible,
    iter_revlex,
    multi_revlex_complex,
    revlex_complex,
    revlex_face_set,
    revlex_precedes,
    revlex_rank,
    revlex_unrank,
)
from .faces import (
    face_vector,
    facets_from_text,
    facets_to_text,
    revlex_face_counts,
    upper_closure_count,
)

__all__ = [
    "colored_revlex_complex",
    "face_vector",
    "facets_from_text",
    "facets_to_text",
    "is_r_permissible",
    "iter_revlex",
    "multi_revlex_complex",
    "revlex_complex",
    "revlex_face_counts",
    "revlex_face_set",
    "revlex_precedes",
    "revlex_rank",
    "revlex_unrank",
    "upper_closure_count",
]
