"""Data models for binomial cascade representations."""
from typing import Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cliquebounds.core.binomial import r_sum, turan_binom
from cliquebounds.errors import DomainError

import logging
logger = logging.getLogger(__name__)


def check_cascade(k: int, terms: Sequence[int], allow_empty: bool = False) -> None:
    """
    Validate a k-cascade n_k > n_{k-1} > ... > n_{k-s} with n_{k-i} >= k-i > 0.

    Raises:
        DomainError: If any cascade condition fails
    """
    if not terms:
        if allow_empty:
            return
        raise DomainError(f"{k}-cascade must have at least one term")
    if len(terms) > k:
        raise DomainError(f"{k}-cascade has {len(terms)} terms, at most {k} allowed")
    for i, n in enumerate(terms):
        if n < k - i:
            raise DomainError(f"term {n} paired with {k - i} is below its index")
        if i and n >= terms[i - 1]:
            raise DomainError(f"terms must strictly decrease: {list(terms)}")


class CascadeRep(BaseModel):
    """Unique k-cascade representation m = C(n_k, k) + C(n_{k-1}, k-1) + ..."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Index paired with the leading term")
    terms: Tuple[int, ...] = Field(..., description="n_k, n_{k-1}, ..., n_{k-s}")

    @model_validator(mode="after")
    def _validate_terms(self) -> "CascadeRep":
        check_cascade(self.k, self.terms)
        return self

    @property
    def value(self) -> int:
        """Recomposed integer r_k(terms)."""
        return r_sum(self.k, self.terms)

    @property
    def leading(self) -> int:
        return self.terms[0]

    def shifted(self, shift: int = 1) -> int:
        """r_{k+shift}(terms): the same terms paired with indices moved up."""
        return r_sum(self.k + shift, self.terms)


class LgbdRep(BaseModel):
    """
    Representation m = r_k(n_k, n_{k-1}) + r_{k-1}(a_{k-1}, ..., a_{k-s}).

    A missing second cascade term is stored as the sentinel n_k1 = k - 2,
    which contributes C(k-2, k-1) = 0 to every sum.
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=2, description="Index paired with n_k")
    n_k: int = Field(..., description="Leading cascade term")
    n_k1: int = Field(..., description="Second cascade term, or k-2 when absent")
    a_terms: Tuple[int, ...] = Field(default=(), description="(k-1)-cascade of the remainder q")

    @model_validator(mode="after")
    def _validate_parts(self) -> "LgbdRep":
        if not self.n_k > self.n_k1 >= self.k - 2:
            raise DomainError(f"need n_k > n_k1 >= k-2, got {self.n_k}, {self.n_k1} for k={self.k}")
        check_cascade(self.k - 1, self.a_terms, allow_empty=True)
        if not r_sum(self.k - 2, [self.n_k1]) > r_sum(self.k - 1, self.a_terms):
            raise DomainError("remainder is not below r_{k-2}(n_{k-1})")
        return self

    @property
    def has_second_term(self) -> bool:
        return self.n_k1 >= self.k - 1

    @property
    def remainder(self) -> int:
        """The q of the decomposition: r_{k-1}(a_terms)."""
        return r_sum(self.k - 1, self.a_terms)

    @property
    def value(self) -> int:
        return r_sum(self.k, [self.n_k, self.n_k1]) + self.remainder

    def a(self, index: int) -> int:
        """a_{index}, or 0 when that term does not exist."""
        position = self.k - 1 - index
        if 0 <= position < len(self.a_terms):
            return self.a_terms[position]
        return 0


class ColoredRep(BaseModel):
    """Turán-binomial representation m = T(n_k, k, r) + T(n_{k-1}, k-1, r-1) + ..."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Index paired with the leading term")
    r: int = Field(..., description="Color count paired with the leading term")
    terms: Tuple[Tuple[int, int], ...] = Field(..., description="Pairs (n_{k-i}, r-i)")

    @model_validator(mode="after")
    def _validate_terms(self) -> "ColoredRep":
        if self.r < self.k:
            raise DomainError(f"colored representation needs r >= k, got r={self.r}, k={self.k}")
        if not self.terms or len(self.terms) > self.k:
            raise DomainError(f"colored representation needs 1..{self.k} terms")
        for i, (n, color) in enumerate(self.terms):
            if color != self.r - i:
                raise DomainError(f"term {i} has color {color}, expected {self.r - i}")
            if n < self.k - i:
                raise DomainError(f"term {n} paired with {self.k - i} is below its index")
            if i + 1 < len(self.terms) and not n - n // color > self.terms[i + 1][0]:
                raise DomainError(f"gap condition fails between terms {i} and {i + 1}")
        return self

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(n for n, _ in self.terms)

    @property
    def value(self) -> int:
        return self.shifted(0)

    def shifted(self, shift: int = 1) -> int:
        """Sum of T(n_{k-i}, k-i+shift, r-i): clique indices moved up by `shift`."""
        return sum(
            turan_binom(n, self.k - i + shift, color)
            for i, (n, color) in enumerate(self.terms)
        )

    def a(self, index: int) -> int:
        """The vertex count a_{index} paired with clique size `index`, 0 when absent."""
        position = self.k - index
        if 0 <= position < len(self.terms):
            return self.terms[position][0]
        return 0
