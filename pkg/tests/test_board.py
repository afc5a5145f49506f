"""Two-row board: moves, invariants and full runs."""
import random

import pytest
from hypothesis import given, settings, strategies as st

from cliquebounds.board import (
    apply_move,
    check_move,
    classify_move,
    collapse_row,
    random_board_instance,
    run_board,
    subdivide_row,
)
from cliquebounds.core.binomial import r_sum
from cliquebounds.errors import BoardInvariantError, DomainError
from cliquebounds.models.board import BoardState, MoveType


class TestRowOperations:

    def test_subdivide_then_collapse(self):
        row = subdivide_row((5,), 3, 1)
        assert row == (4, 3, 3)
        assert collapse_row(row) == (5,)

    def test_subdivide_keeps_every_sum(self):
        row = (7, 5)
        split = subdivide_row(row, 3, 1)
        assert split == (7, 4, 4)
        for level in (3, 4, 5):
            assert r_sum(level, split) == r_sum(level, row)

    def test_collapse_only_on_a_repeat(self):
        assert collapse_row((6, 4, 3)) == (6, 4, 3)
        assert collapse_row((6, 4, 4)) == (6, 5)
        assert collapse_row((5, 4, 4)) == (6,)

    def test_subdivide_domain(self):
        with pytest.raises(DomainError):
            subdivide_row((), 3, 1)
        with pytest.raises(DomainError):
            subdivide_row((5, 2), 3, 2)
        with pytest.raises(DomainError):
            subdivide_row((5, 2), 3, 1)


class TestClassification:

    @pytest.mark.parametrize("top,bottom,expected", [
        ((4, 3), (4, 2), MoveType.T4),
        ((5, 3, 1), (5, 2), MoveType.T3),
        ((5, 3, 2), (5,), MoveType.T5),
        ((5, 4), (4, 3, 2), MoveType.T1),
        ((5, 4, 2), (4, 3), MoveType.T8),
        ((5, 2), (4, 3), MoveType.T2),
    ])
    def test_flowchart(self, top, bottom, expected):
        assert classify_move(BoardState(k=3, top=top, bottom=bottom)) == expected

    def test_seventh_type_when_both_rows_start_in_column_one(self):
        assert classify_move(BoardState(k=1, top=(3,), bottom=(2,))) == MoveType.T7

    def test_empty_bottom(self):
        assert classify_move(BoardState(k=3, top=(5,), bottom=())) is None

    def test_apply_refuses_other_moves(self):
        state = BoardState(k=3, top=(4, 3), bottom=(4, 2))
        with pytest.raises(DomainError):
            apply_move(state, MoveType.T1)

    def test_impermissible_rows(self):
        with pytest.raises(ValueError):
            BoardState(k=3, top=(4, 4), bottom=())
        with pytest.raises(ValueError):
            BoardState(k=2, top=(3, 0), bottom=())


class TestMoves:

    def test_fifth_type_subdivides_then_swaps(self):
        state = BoardState(k=3, top=(5, 3, 2), bottom=(5,))
        post, record = apply_move(state, MoveType.T5)
        assert post.top == (5, 4)
        assert post.bottom == (4, 3, 2)
        assert record.substeps == (MoveType.SUBDIVIDE,)
        check_move(record)

    def test_third_type_collapses(self):
        state = BoardState(k=3, top=(5, 4, 3), bottom=(4, 2, 1))
        post, record = apply_move(state, MoveType.T3)
        assert post.top == (6,)
        assert post.bottom == (4, 2)
        assert MoveType.COLLAPSE in record.substeps
        assert record.r_k1_increase > 0

    def test_check_move_reports_broken_sums(self):
        state = BoardState(k=3, top=(4, 3), bottom=(4, 2))
        _, record = apply_move(state, MoveType.T4)
        broken = record.model_copy(update={"r_k_bottom_after": record.r_k_bottom_after + 1})
        with pytest.raises(BoardInvariantError) as info:
            check_move(broken)
        assert info.value.trace == [broken]


class TestRuns:

    def test_three_columns(self):
        run = run_board(3, [4, 3], [4, 2])
        assert [record.move_type for record in run.trace] == [MoveType.T4, MoveType.T5, MoveType.T3]
        assert run.final.top == (5,)
        assert run.final.bottom == (3, 2)
        assert (run.r_k1_before, run.r_k1_after) == (3, 5)
        assert run.lemma_holds

    def test_two_columns(self):
        run = run_board(2, [3, 2], [3, 1])
        assert [record.move_type for record in run.trace] == [MoveType.T3]
        assert run.final.top == (4,)
        assert run.final.bottom == (3,)

    def test_one_column(self):
        run = run_board(1, [3], [2])
        assert [record.move_type for record in run.trace] == [MoveType.T7]
        assert run.final.top == (4,)
        assert run.final.bottom == (1,)
        assert (run.r_k1_before, run.r_k1_after) == (4, 6)

    def test_mixed_moves(self):
        run = run_board(3, [5, 3, 1], [5, 2])
        assert [record.move_type for record in run.trace] == [
            MoveType.T3, MoveType.T5, MoveType.T1, MoveType.T8, MoveType.T3,
        ]
        assert run.final.top == (6,)
        assert run.final.bottom == (4, 2)
        assert run.steps <= run.step_bound

    def test_total_too_small(self):
        with pytest.raises(DomainError):
            run_board(2, [3], [2])

    @pytest.mark.parametrize("k,top,bottom", [
        (3, [4, 4], [3]),
        (3, [3], [4]),
        (0, [1], [1]),
        (3, [], [3]),
    ])
    def test_invalid_rows(self, k, top, bottom):
        with pytest.raises(DomainError):
            run_board(k, top, bottom)

    def test_random_instances_terminate(self):
        rng = random.Random(2024)
        for _ in range(200):
            k = rng.randint(1, 4)
            a, c = random_board_instance(rng, k, max_term=9)
            run = run_board(k, a, c)
            assert run.final.top == (a[0] + 1,)
            assert run.lemma_holds
            assert run.steps <= run.step_bound

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=2**32))
    def test_every_move_keeps_the_conditions(self, k, seed):
        a, c = random_board_instance(random.Random(seed), k, max_term=k + 7)
        run = run_board(k, a, c)
        total = r_sum(k, a) + r_sum(k, c)
        for record in run.trace:
            assert record.post_state.total(k) == total
            assert record.r_k1_increase >= 0
            assert record.r_k_top_after > record.r_k_top_before
        assert run.final.bottom == run.expected_bottom

    def test_random_instance_domain(self):
        with pytest.raises(DomainError):
            random_board_instance(random.Random(0), 4, max_term=3)
