"""Data models for face families and simplicial complexes."""
from itertools import combinations
from typing import Iterable, Set, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

import logging
logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


def revlex_key(face: Iterable[int]) -> Tuple[int, ...]:
    """Sort key realising rev-lex order on sets of equal size."""
    return tuple(sorted(face, reverse=True))


def _check_face(face: Face) -> Face:
    if any(v < 1 for v in face):
        raise ValueError(f"vertices are positive integers, got {face}")
    if any(a >= b for a, b in zip(face, face[1:])):
        raise ValueError(f"face must be strictly increasing, got {face}")
    return face


class FaceSet(BaseModel):
    """k-sets listed in rev-lex order."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0, description="Face cardinality")
    faces: Tuple[Face, ...] = Field(default=(), description="Strictly increasing vertex tuples")

    @model_validator(mode="after")
    def _validate_order(self) -> "FaceSet":
        for face in self.faces:
            _check_face(face)
            if len(face) != self.k:
                raise ValueError(f"face {face} does not have {self.k} vertices")
        keys = [revlex_key(face) for face in self.faces]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("faces must be distinct and listed in rev-lex order")
        return self

    def __len__(self) -> int:
        return len(self.faces)


class Complex(BaseModel):
    """Simplicial complex given by its facets (the empty face is always present)."""
    model_config = ConfigDict(frozen=True)

    facets: Tuple[Face, ...] = Field(default=(), description="Maximal faces, mixed cardinalities allowed")

    @field_validator("facets")
    @classmethod
    def _validate_facets(cls, facets: Tuple[Face, ...]) -> Tuple[Face, ...]:
        for face in facets:
            _check_face(face)
        return tuple(face for face in facets if face)

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]]) -> "Complex":
        """
        Build a complex from any generating faces, keeping only maximal ones.

        Args:
            faces: Vertex collections (duplicates and non-maximal faces allowed)

        Returns:
            Complex whose facets are the inclusion-maximal generators
        """
        unique = sorted({tuple(sorted(face)) for face in faces if face}, key=len, reverse=True)
        covered: Set[Face] = set()
        facets = []
        for face in unique:
            if face in covered:
                continue
            facets.append(face)
            for size in range(1, len(face)):
                covered.update(combinations(face, size))
        facets.sort(key=lambda f: (len(f), revlex_key(f)))
        return cls(facets=tuple(facets))

    @property
    def dimension(self) -> int:
        """Largest facet cardinality (0 for the empty complex)."""
        return max((len(f) for f in self.facets), default=0)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted({v for face in self.facets for v in face}))

    def facets_of_size(self, size: int) -> Tuple[Face, ...]:
        return tuple(f for f in self.facets if len(f) == size)
