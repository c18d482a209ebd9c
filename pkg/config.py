"""
Configuration constants for the Atom Decomposer application.

This module contains all the configuration parameters and constants
used throughout the decomposition, verification and benchmarking code.
"""

from typing import Optional, Tuple

# Algorithm selection
ALGORITHMS: Tuple[str, ...] = ("rda", "prda", "baseline")
DEFAULT_ALGORITHM: str = "rda"

# MCS tie-breaking
DEFAULT_TIE_BREAK: str = "lowest-id"
RANDOM_TIE_BREAK_PREFIX: str = "random:"

# Parallel decomposition
PRDA_PARALLEL_CUTOFF: int = 256          # Regions smaller than this recurse sequentially
PRDA_MAX_WORKERS: Optional[int] = None   # None means os.cpu_count()

# Brute-force oracle budgets
ORACLE_MAX_VERTICES: int = 12       # Atoms and clique minimal separators
ORACLE_HULL_MAX_VERTICES: int = 11  # Convex hulls
ORACLE_MAX_SUBSETS: int = 1 << 16   # Safety cap on enumerated subsets

# Benchmarking
BENCH_DEFAULT_REPEATS: int = 20
BENCH_TIMEOUT_SECONDS: float = 600.0
BENCH_SKIPPED_MARK: str = "---"

# Edge-list input
COMMENT_PREFIX: str = "#"

# Command-line front end
EXIT_OK: int = 0
EXIT_FAILURE: int = 1
EXIT_USAGE: int = 2
LOG_FORMAT: str = "%(levelname)s %(name)s: %(message)s"
