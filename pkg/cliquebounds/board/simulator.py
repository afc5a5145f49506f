"""
Two-row board rearrangement.

Starting from a in the top row and c in the bottom row, allowable moves are
applied until the top row reads a_k + 1. Each move keeps the r_k total,
never lowers the r_{k+1} total and strictly raises r_k of the top row.
"""
import random
from typing import List, Optional, Sequence, Tuple

from cliquebounds.config import BOARD_CONFIG
from cliquebounds.core.binomial import r_sum
from cliquebounds.core.representations import cascade_terms
from cliquebounds.errors import BoardInvariantError, DomainError
from cliquebounds.models.board import BoardRun, BoardState, MoveRecord, MoveType, Row, check_row

import logging
logger = logging.getLogger(__name__)


def subdivide_row(row: Row, k: int, down_to: int) -> Row:
    """
    Split the last entry y (in column h) over columns h..down_to.

    The new entries are y-1, y-2, ..., y-(h-down_to), y-(h-down_to); every
    cascade sum of the row is unchanged.

    Raises:
        DomainError: If the row is empty, down_to >= h, or y <= h
    """
    if not row:
        raise DomainError("cannot subdivide an empty row")
    h = k - len(row) + 1
    y = row[-1]
    if not 1 <= down_to < h:
        raise DomainError(f"subdivision target column {down_to} must lie in [1, {h - 1}]")
    if y <= h:
        raise DomainError(f"entry {y} in column {h} is too small to subdivide")
    span = h - down_to
    return row[:-1] + tuple(y - d for d in range(1, span + 1)) + (y - span,)


def collapse_row(row: Row) -> Row:
    """
    Undo a subdivision at the right end of a row.

    Applies when the last two entries are equal: the longest run
    x_i, x_i - 1, ..., v, v ending the row becomes the single entry x_i + 1.
    Rows not ending in a repeat are returned unchanged.
    """
    if len(row) < 2 or row[-1] != row[-2]:
        return row
    j = len(row) - 2
    while j > 0 and row[j - 1] == row[j] + 1:
        j -= 1
    return row[:j] + (row[j] + 1,)


def _largest_exceeding_column(state: BoardState) -> Optional[int]:
    """Largest column holding both entries with y_i > x_i."""
    for column in range(state.k, max(state.g, state.h) - 1, -1):
        if state.y(column) > state.x(column):
            return column
    return None


def classify_move(state: BoardState) -> Optional[MoveType]:
    """
    Pick the next move by the decision flowchart; None once the bottom row is empty.

    Raises:
        BoardInvariantError: If no branch applies
    """
    if not state.bottom:
        return None
    if _largest_exceeding_column(state) is not None:
        return MoveType.T2
    g, h = state.g, state.h
    if g > h:
        return MoveType.T1
    y_h = state.y(h)
    if y_h > h:
        if state.x(g) - g < y_h - h:
            return MoveType.T5
        if g == 1:
            return MoveType.T7 if h == 1 else MoveType.T8
        return MoveType.T6
    if y_h == h:
        return MoveType.T3 if g == 1 else MoveType.T4
    raise BoardInvariantError(f"no move applies to top={list(state.top)} bottom={list(state.bottom)}")


def _swap(top: Row, bottom: Row, k: int, column: int) -> Tuple[Row, Row]:
    cut = k - column
    return top[:cut] + bottom[cut:], bottom[:cut] + top[cut:]


def _shift_unit(top: Row, bottom: Row, substeps: List[MoveType]) -> Tuple[Row, Row]:
    """Seventh-type step: one unit from y_1 to x_1, then collapse the top if needed."""
    y = bottom[-1] - 1
    bottom = bottom[:-1] + ((y,) if y > 0 else ())
    top = top[:-1] + (top[-1] + 1,)
    collapsed = collapse_row(top)
    if collapsed != top:
        substeps.append(MoveType.COLLAPSE)
    return collapsed, bottom


def _bump_last(top: Row, substeps: List[MoveType]) -> Row:
    top = top[:-1] + (top[-1] + 1,)
    collapsed = collapse_row(top)
    if collapsed != top:
        substeps.append(MoveType.COLLAPSE)
    return collapsed


def apply_move(state: BoardState, move: MoveType) -> Tuple[BoardState, MoveRecord]:
    """
    Apply a composite move and record the sums before and after.

    Raises:
        DomainError: If `move` is not the move the flowchart selects for `state`
        BoardInvariantError: If the result is not permissible
    """
    expected = classify_move(state)
    if move != expected:
        raise DomainError(f"move {move.value} requested but the board calls for {expected}")
    k, top, bottom = state.k, state.top, state.bottom
    g, h = state.g, state.h
    substeps: List[MoveType] = []

    if move == MoveType.T2:
        top, bottom = _swap(top, bottom, k, _largest_exceeding_column(state))
    elif move == MoveType.T1:
        top, bottom = top + bottom[len(top):], bottom[:len(top)]
    elif move == MoveType.T3:
        top, bottom = _bump_last(top, substeps), bottom[:-1]
    elif move == MoveType.T4:
        top, bottom = top + (g - 1,), bottom[:-1]
    elif move == MoveType.T5:
        y_h = state.y(h)
        column = next(i for i in range(h - 1, g - 1, -1) if y_h - (h - i) > state.x(i))
        bottom = subdivide_row(bottom, k, column)
        substeps.append(MoveType.SUBDIVIDE)
        top, bottom = _swap(top, bottom, k, column)
    elif move == MoveType.T6:
        bottom = subdivide_row(bottom, k, g - 1)
        substeps.append(MoveType.SUBDIVIDE)
        top, bottom = top + bottom[-1:], bottom[:-1]
    elif move == MoveType.T7:
        top, bottom = _shift_unit(top, bottom, substeps)
    elif move == MoveType.T8:
        bottom = subdivide_row(bottom, k, 1)
        substeps.append(MoveType.SUBDIVIDE)
        top, bottom = _shift_unit(top, bottom, substeps)
    else:
        raise DomainError(f"{move.value} is a sub-step, not a composite move")

    try:
        post = BoardState(k=k, top=top, bottom=bottom)
    except ValueError as e:
        raise BoardInvariantError(f"{move.value} left an impermissible board: {e}") from e
    record = MoveRecord(
        move_type=move,
        substeps=tuple(substeps),
        pre_state=state,
        post_state=post,
        r_k_top_before=state.r_top(k),
        r_k_top_after=post.r_top(k),
        r_k_bottom_before=state.r_bottom(k),
        r_k_bottom_after=post.r_bottom(k),
        r_k1_top_before=state.r_top(k + 1),
        r_k1_top_after=post.r_top(k + 1),
        r_k1_bottom_before=state.r_bottom(k + 1),
        r_k1_bottom_after=post.r_bottom(k + 1),
    )
    logger.debug(f"{move.value}: {list(state.top)}/{list(state.bottom)} -> {list(post.top)}/{list(post.bottom)}")
    return post, record


def check_move(record: MoveRecord, trace: Sequence[MoveRecord] = ()) -> None:
    """
    Raise BoardInvariantError unless the move kept the r_k total, did not
    lower the r_{k+1} total and strictly raised r_k of the top row.
    """
    before = record.r_k_top_before + record.r_k_bottom_before
    after = record.r_k_top_after + record.r_k_bottom_after
    problem = None
    if before != after:
        problem = f"r_k total changed from {before} to {after}"
    elif record.r_k1_increase < 0:
        problem = f"r_k+1 total fell by {-record.r_k1_increase}"
    elif record.r_k_top_after <= record.r_k_top_before:
        problem = "r_k of the top row did not increase"
    if problem:
        raise BoardInvariantError(f"{record.move_type.value}: {problem}", list(trace) + [record])


def run_board(k: int, a_terms: Sequence[int], c_terms: Sequence[int]) -> BoardRun:
    """
    Rearrange the board from (a, c) until the top row reads a_k + 1.

    Args:
        k: Column count
        a_terms: k-cascade a_k, a_{k-1}, ... for the top row
        c_terms: k-cascade c_k, c_{k-1}, ... for the bottom row, c_k <= a_k

    Returns:
        BoardRun with the trace; the final bottom row is the k-cascade of
        r_k(a) + r_k(c) - r_k(a_k + 1)

    Raises:
        DomainError: If the rows are not cascades, c_k > a_k, or
            r_k(a) + r_k(c) < r_k(a_k + 1)
        BoardInvariantError: If a move breaks a condition or the step bound is exceeded
    """
    a, c = tuple(a_terms), tuple(c_terms)
    if k < 1:
        raise DomainError(f"board needs k >= 1, got {k}")
    if not a:
        raise DomainError("top row must start non-empty")
    try:
        check_row(k, a, "a_terms")
        check_row(k, c, "c_terms")
    except ValueError as e:
        raise DomainError(str(e)) from e
    if c and c[0] > a[0]:
        raise DomainError(f"need c_k <= a_k, got c_k={c[0]} > a_k={a[0]}")
    m = r_sum(k, a) + r_sum(k, c)
    target = r_sum(k, [a[0] + 1])
    if m < target:
        raise DomainError(
            f"r_k(a) + r_k(c) = {m} is below r_k(a_k + 1) = {target}; the run cannot reach a_k + 1"
        )
    expected_bottom = cascade_terms(m - target, k) if m > target else ()

    initial = state = BoardState(k=k, top=a, bottom=c)
    trace: List[MoveRecord] = []
    while state.top[0] <= a[0]:
        if len(trace) >= target:
            raise BoardInvariantError(f"no termination within {target} moves", trace)
        move = classify_move(state)
        if move is None:
            raise BoardInvariantError("bottom row emptied before termination", trace)
        state, record = apply_move(state, move)
        if BOARD_CONFIG["check_invariants"]:
            check_move(record, trace)
        trace.append(record)

    if state.top != (a[0] + 1,) or state.bottom != tuple(expected_bottom):
        raise BoardInvariantError(
            f"terminal board {list(state.top)}/{list(state.bottom)} differs from "
            f"[{a[0] + 1}]/{list(expected_bottom)}",
            trace,
        )
    run = BoardRun(
        k=k, a_terms=a, c_terms=c, initial=initial, final=state, trace=trace,
        expected_bottom=tuple(expected_bottom), step_bound=target,
        r_k1_before=r_sum(k + 1, a) + r_sum(k + 1, c),
        r_k1_after=r_sum(k + 1, [a[0] + 1]) + r_sum(k + 1, expected_bottom),
    )
    if not run.lemma_holds:
        raise BoardInvariantError(
            f"r_k+1 total did not strictly increase ({run.r_k1_before} -> {run.r_k1_after})", trace
        )
    logger.info(f"board k={k} a={list(a)} c={list(c)}: {run.steps} moves, r_k+1 {run.r_k1_before} -> {run.r_k1_after}")
    return run


def _random_row(rng: random.Random, k: int, max_term: int, lead_cap: Optional[int] = None) -> Row:
    length = rng.randint(1, k)
    low = k - length + 1
    high = max_term if lead_cap is None else min(max_term, lead_cap)
    if high - low + 1 < length:
        return ()
    return tuple(sorted(rng.sample(range(low, high + 1), length), reverse=True))


def random_board_instance(rng: random.Random, k: int, max_term: int, attempts: int = 1000) -> Tuple[Row, Row]:
    """
    Draw cascades (a, c) satisfying the run preconditions.

    Raises:
        DomainError: If max_term < k or no valid pair turned up within `attempts`
    """
    if max_term < k:
        raise DomainError(f"max_term must be at least k, got max_term={max_term}, k={k}")
    for _ in range(attempts):
        a = _random_row(rng, k, max_term)
        c = _random_row(rng, k, max_term, lead_cap=a[0] if a else None)
        if a and c and r_sum(k, a) + r_sum(k, c) >= r_sum(k, [a[0] + 1]):
            return a, c
    raise DomainError(f"no valid board instance for k={k}, max_term={max_term} in {attempts} draws")
