"""Exact bounds on clique counts, bound-attaining graphs and brute-force checks."""
__version__ = "0.1.0"

from cliquebounds.core.binomial import binom, r_sum, turan_binom
from cliquebounds.core.bounds import kalai_eckhoff_bound, lgbd, main_bound, nonconsec_bound, oldbd, smbd
from cliquebounds.core.representations import colored_rep, kk_rep, lgbd_rep
from cliquebounds.errors import (
    BoardInvariantError,
    CliqueBoundsError,
    CounterexampleError,
    DomainError,
    InapplicableConstructionError,
    ResourceLimitError,
)

__all__ = [
    "BoardInvariantError",
    "CliqueBoundsError",
    "CounterexampleError",
    "DomainError",
    "InapplicableConstructionError",
    "ResourceLimitError",
    "binom",
    "colored_rep",
    "kalai_eckhoff_bound",
    "kk_rep",
    "lgbd",
    "lgbd_rep",
    "main_bound",
    "nonconsec_bound",
    "oldbd",
    "r_sum",
    "smbd",
    "turan_binom",
]
