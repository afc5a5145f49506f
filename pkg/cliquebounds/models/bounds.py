"""Data models for bound reports and ratio statistics."""
from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

import logging
logger = logging.getLogger(__name__)


class Winner(str, Enum):
    """Which bound decides the main theorem's maximum."""
    LGBD = "LGBD"
    SMBD = "SMBD"
    TIE = "TIE"


class BoundReport(BaseModel):
    """All bounds on the (k+1)-clique count of a graph with m k-cliques."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=0, description="Number of k-cliques")
    k: int = Field(..., ge=1, description="Clique size")
    oldbd: int = Field(..., description="Kruskal-Katona bound")
    lgbd: int = Field(..., description="Bound when an n_k-clique is present")
    smbd: Optional[int] = Field(None, description="Bound when no n_k-clique is present; None if undefined")
    main: int = Field(..., description="max(lgbd, smbd), undefined smbd counted as 0")
    winner: Winner = Field(..., description="Which component attains main")

    @model_validator(mode="after")
    def _check_main(self) -> "BoundReport":
        if self.main != max(self.lgbd, self.smbd or 0):
            raise ValueError("main must equal max(lgbd, smbd)")
        return self


class NonconsecReport(BaseModel):
    """Bound on the (k+i)-clique count of a graph with m k-cliques."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=0)
    k: int = Field(..., ge=1)
    step: int = Field(..., ge=1, description="Dimension gap i")
    lgbd_component: int = Field(..., description="r_{k+i}(n_k, n_{k-1}) + r_{k+i-1}(a_terms)")
    colored_component: Optional[int] = Field(None, description="Colored form shifted by i; None if undefined")
    bound: int = Field(..., description="Larger of the two components")


class RatioStats(BaseModel):
    """How far lgbd sits between the constructive lower bound and oldbd."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int = Field(..., ge=1)
    k: int = Field(..., ge=3)
    oldbd: int
    lgbd: int
    conbd_lower: int = Field(..., description="(k+1)-cliques of the two-added-vertices graph")
    ratio_proxy: Fraction = Field(..., description="(lgbd - conbd_lower) / (oldbd - conbd_lower)")
    ratbound_rhs: Optional[Fraction] = Field(None, description="k^2 / (n_{k-2} - k^2) when n_{k-2} > k^2")
