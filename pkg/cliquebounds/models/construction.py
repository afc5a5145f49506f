"""Data models for bound-attaining graph constructions."""
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

import logging
logger = logging.getLogger(__name__)


class ConstructionTag(str, Enum):
    """Which construction produced a graph."""
    CONST1 = "CONST1"       # K_{n_k} + vertex on n_{k-1} + vertex on a_{k-1}
    CONST2 = "CONST2"       # as CONST1, the second vertex also joined to the first
    CONST3 = "CONST3"       # Turán graph + vertex on an induced Turán graph
    LOWER = "LOWER"         # witness of the constructive lower bound


class ConstructionPlan(BaseModel):
    """What a construction built and which clique counts it promises."""
    model_config = ConfigDict(frozen=True)

    base: ConstructionTag = Field(..., description="Construction used")
    m: int = Field(..., ge=1, description="Requested number of k-cliques")
    k: int = Field(..., ge=1, description="Clique size")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Representation terms used")
    padding: int = Field(..., ge=0, description="Disjoint K_k blocks appended")
    vertex_count: int = Field(..., ge=0)
    predicted_ck: int = Field(..., description="k-cliques by closed form (equals m)")
    predicted_ck1: int = Field(..., description="(k+1)-cliques by closed form")
    bound_name: str = Field(..., description="Bound the construction attains")
    bound_value: int = Field(..., description="Value of that bound at (m, k)")
    verified: Optional[bool] = Field(None, description="Enumeration agreed; None when not enumerated")
