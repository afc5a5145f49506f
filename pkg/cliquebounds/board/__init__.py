"""Two-row board rearrangement simulator."""
from .simulator import (
    apply_move,
    check_move,
    classify_move,
    collapse_row,
    random_board_instance,
    run_board,
    subdivide_row,
)

__all__ = [
    "apply_move",
    "check_move",
    "classify_move",
    "collapse_row",
    "random_board_instance",
    "run_board",
    "subdivide_row",
]
