"""Data models for the two-row board rearrangement."""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from cliquebounds.core.binomial import r_sum

import logging
logger = logging.getLogger(__name__)


Row = Tuple[int, ...]


class MoveType(str, Enum):
    """Composite moves of the rearrangement and the sub-steps they are built from."""
    T1 = "T1"   # move the bottom's extra right entries up
    T2 = "T2"   # swap both rows from a column to the right edge
    T3 = "T3"   # clear y_h = h, bump x_1
    T4 = "T4"   # clear y_h = h, write g-1 into the top row
    T5 = "T5"   # subdivide y_h, then swap
    T6 = "T6"   # subdivide y_h, move its last piece up
    T7 = "T7"   # shift one unit from y_1 to x_1
    T8 = "T8"   # subdivide down to column 1, then T7
    SUBDIVIDE = "SUBDIVIDE"
    COLLAPSE = "COLLAPSE"


def check_row(k: int, row: Row, name: str = "row") -> None:
    """
    Raise ValueError unless `row` is permissible on a board with k columns.

    Entries sit left-anchored from column k, strictly decrease, and the
    rightmost entry, in column i, is at least i.
    """
    if len(row) > k:
        raise ValueError(f"{name} has {len(row)} entries on a {k}-column board")
    if any(x < 1 for x in row):
        raise ValueError(f"{name} entries must be positive: {list(row)}")
    if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
        raise ValueError(f"{name} must strictly decrease: {list(row)}")
    if row and row[-1] < k - len(row) + 1:
        raise ValueError(
            f"{name} ends with {row[-1]} in column {k - len(row) + 1}, below the column index"
        )


class BoardState(BaseModel):
    """
    Two rows on a board with columns numbered k (left) down to 1 (right).

    top[j] and bottom[j] sit in column k - j; blanks only appear on the right.
    """
    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=1, description="Column count")
    top: Row = Field(..., description="x_k, x_{k-1}, ..., x_g")
    bottom: Row = Field(default=(), description="y_k, y_{k-1}, ..., y_h")

    @model_validator(mode="after")
    def _check_permissible(self) -> "BoardState":
        check_row(self.k, self.top, "top row")
        check_row(self.k, self.bottom, "bottom row")
        return self

    @property
    def g(self) -> int:
        """Column of the rightmost top entry (k + 1 when the row is empty)."""
        return self.k - len(self.top) + 1

    @property
    def h(self) -> int:
        """Column of the rightmost bottom entry (k + 1 when the row is empty)."""
        return self.k - len(self.bottom) + 1

    def x(self, column: int) -> Optional[int]:
        index = self.k - column
        return self.top[index] if 0 <= index < len(self.top) else None

    def y(self, column: int) -> Optional[int]:
        index = self.k - column
        return self.bottom[index] if 0 <= index < len(self.bottom) else None

    def r_top(self, level: int) -> int:
        """r_level of the top row, the leading entry paired with `level`."""
        return r_sum(level, self.top)

    def r_bottom(self, level: int) -> int:
        return r_sum(level, self.bottom)

    def total(self, level: int) -> int:
        return self.r_top(level) + self.r_bottom(level)

    def render(self) -> str:
        """Two-row ASCII board with a column header."""
        width = max([len(str(v)) for v in self.top + self.bottom] + [len(str(self.k))])

        def line(cells: List[str]) -> str:
            return "| " + " | ".join(c.rjust(width) for c in cells) + " |"

        def cells(row: Row) -> List[str]:
            return [str(v) for v in row] + [""] * (self.k - len(row))

        header = line([str(c) for c in range(self.k, 0, -1)])
        rule = "+" + "+".join("-" * (width + 2) for _ in range(self.k)) + "+"
        return "\n".join([header, rule, line(cells(self.top)), line(cells(self.bottom)), rule])


class MoveRecord(BaseModel):
    """One composite move with the sums it preserved or raised."""
    model_config = ConfigDict(frozen=True)

    move_type: MoveType
    substeps: Tuple[MoveType, ...] = Field(default=(), description="SUBDIVIDE / COLLAPSE steps inside the move")
    pre_state: BoardState
    post_state: BoardState
    r_k_top_before: int
    r_k_top_after: int
    r_k_bottom_before: int
    r_k_bottom_after: int
    r_k1_top_before: int
    r_k1_top_after: int
    r_k1_bottom_before: int
    r_k1_bottom_after: int

    @property
    def r_k1_increase(self) -> int:
        """Change of the r_{k+1} total across the move."""
        return (self.r_k1_top_after + self.r_k1_bottom_after) - (
            self.r_k1_top_before + self.r_k1_bottom_before
        )


class BoardRun(BaseModel):
    """Result of running the rearrangement to termination."""
    model_config = ConfigDict(frozen=True)

    k: int
    a_terms: Row
    c_terms: Row
    initial: BoardState
    final: BoardState
    trace: List[MoveRecord] = Field(default_factory=list)
    expected_bottom: Row = Field(..., description="k-cascade of m - r_k(a_k + 1)")
    step_bound: int = Field(..., description="r_k(a_k + 1)")
    r_k1_before: int = Field(..., description="r_{k+1}(c) + r_{k+1}(a)")
    r_k1_after: int = Field(..., description="r_{k+1}(a_k + 1) + r_{k+1}(b)")

    @property
    def steps(self) -> int:
        return len(self.trace)

    @property
    def lemma_holds(self) -> bool:
        """Strict increase of the r_{k+1} total, recomputed from the endpoints."""
        return self.r_k1_after > self.r_k1_before
