"""Data models for brute-force censuses, extremal tables and verification reports."""
import csv
import io
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cliquebounds.config import OUTPUT_CONFIG

import logging
logger = logging.getLogger(__name__)


class ConbdStatus(str, Enum):
    """Whether an extremal-table row pins down conbd."""
    EXACT = "exact"
    LOWER_BOUND_ONLY = "lower bound only"


class NonexistenceStatus(str, Enum):
    CERTIFIED_BY_BOUND = "certified-by-bound"
    NONE_FOUND = "none-found"
    EXISTS = "exists"


class CensusEntry(BaseModel):
    """One distinct clique vector and the first graph that produced it."""
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...] = Field(..., description="c_0, c_1, ..., c_omega")
    index: int = Field(..., ge=0, description="Edge-subset enumeration index of the witness")
    witness6: str = Field(..., description="graph6 string of the witness")

    def count(self, size: int) -> int:
        return self.counts[size] if size < len(self.counts) else 0

    @property
    def clique_number(self) -> int:
        return len(self.counts) - 1


class CliqueCensus(BaseModel):
    """Every clique vector occurring among labeled graphs on n vertices."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    pruned: bool = Field(..., description="Only graphs with non-increasing degrees were counted")
    total_graphs: int = Field(..., description="2^(n choose 2)")
    graphs_counted: int = Field(..., description="Graphs whose cliques were counted")
    entries: List[CensusEntry] = Field(default_factory=list, description="Sorted by clique vector")

    def vectors(self) -> List[Tuple[int, ...]]:
        return [entry.counts for entry in self.entries]


class ExtremalRow(BaseModel):
    """Largest (k+1)-clique counts among graphs with m k-cliques."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    max_all: int
    max_with_clique: Optional[int] = Field(None, description="Max over graphs containing an n_k-clique")
    max_without: Optional[int] = Field(None, description="Max over graphs without an n_k-clique")
    witness6: str = Field(..., description="Witness of max_all")
    witness_with6: Optional[str] = None
    witness_without6: Optional[str] = None
    lgbd: int
    smbd: Optional[int] = None
    oldbd: int
    main: int
    conbd_status: ConbdStatus

    @model_validator(mode="after")
    def _check_max(self) -> "ExtremalRow":
        parts = [v for v in (self.max_with_clique, self.max_without) if v is not None]
        if not parts or self.max_all != max(parts):
            raise ValueError(f"row m={self.m}: max_all must be the larger conditional maximum")
        return self


class ExtremalTable(BaseModel):
    """Exact conditional maxima per m over all graphs on at most n_max vertices."""
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=2)
    n_max: int = Field(..., ge=1)
    rows: List[ExtremalRow] = Field(default_factory=list)

    def row(self, m: int) -> Optional[ExtremalRow]:
        return next((r for r in self.rows if r.m == m), None)

    def to_csv(self) -> str:
        """CSV with the fixed column set; undefined values are left blank."""
        headers = OUTPUT_CONFIG["table_csv_headers"]
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(headers)
        for row in self.rows:
            values: Dict[str, object] = row.model_dump()
            writer.writerow(["" if values[h] is None else values[h] for h in headers])
        return buffer.getvalue()


class Violation(BaseModel):
    """A graph whose (k+1)-clique count exceeds the applicable bound."""
    model_config = ConfigDict(frozen=True)

    m: int
    ck1: int
    bound_name: str
    bound_value: int
    witness6: str


class TheoremReport(BaseModel):
    """Outcome of checking the main bound against every enumerated clique vector."""
    model_config = ConfigDict(frozen=True)

    k: int
    n_max: int
    vectors_checked: int = Field(..., description="Distinct clique vectors with m >= 1")
    violations: List[Violation] = Field(default_factory=list)
    tight_rows: List[int] = Field(default_factory=list, description="m values whose maximum reaches main")

    @property
    def ok(self) -> bool:
        return not self.violations


class NonexistenceReport(BaseModel):
    """Whether a graph with c_k = m and c_{k+i} = target can exist."""
    model_config = ConfigDict(frozen=True)

    k: int
    step: int
    m: int
    target: int
    n_max: Optional[int] = None
    bound: int = Field(..., description="Bound on c_{k+i} given c_k = m")
    status: NonexistenceStatus
    witness6: Optional[str] = None

    @property
    def nonexistent(self) -> bool:
        """True unless a witness was found (enumeration covers only n_max vertices)."""
        return self.status != NonexistenceStatus.EXISTS
