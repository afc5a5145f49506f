"""Configuration for the clique bound library and its command line."""
import logging
logger = logging.getLogger(__name__)


# Graph Configuration
GRAPH_CONFIG = {
    "enumeration_cap": 64,          # Max vertices for full clique enumeration without max_size
    "verify_constructions": True,   # Enumerate construction graphs when they fit under the cap
}

# Simplicial Complex Configuration
COMPLEX_CONFIG = {
    "face_cap": 10**6,              # Max faces materialized for an explicit complex
}

# Brute-Force Oracle Configuration
ORACLE_CONFIG = {
    "default_n_max": 7,             # Vertex count swept when none is given (2^21 labeled graphs)
    "hard_cap": 8,                  # Absolute ceiling, needs the explicit long-run flag
    "soft_cap": 7,                  # Sweeps above this require allow_long_run=True
    "chunk_count": 64,              # Contiguous edge-subset index ranges per sweep
    "concurrency_limit": 4,         # Max chunks in flight at once
    "workers": 1,                   # Process pool size (1 = run chunks in a thread)
    "prune_by_degree": True,        # Only count cliques of graphs with non-increasing degrees
    "log_every_chunks": 8,          # Progress log interval
}

# Board Simulator Configuration
BOARD_CONFIG = {
    "check_invariants": True,       # Re-check allowable-move conditions after every move
}

# Statistics Configuration
STATS_CONFIG = {
    "fj_grid": [1_000, 10_000, 100_000],   # Default j values for the f_j report
    "log_every": 20_000,                   # Progress log interval (values of m)
}

# Output Configuration
OUTPUT_CONFIG = {
    "schema_version": "1",
    "decimal_places": 6,            # Digits when rendering exact rationals as decimals
    "rational_policy": "fraction-string",   # Rationals are emitted as "p/q"
    "table_csv_headers": [
        "m", "max_all", "max_with_clique", "max_without",
        "lgbd", "smbd", "oldbd", "witness6",
    ],
}

# CLI Exit Statuses
EXIT_CODES = {
    "ok": 0,
    "domain_error": 2,
    "inapplicable": 3,
    "counterexample": 4,
}
