"""
Algorithms package for Atom Decomposer application.

This package contains Maximum Cardinality Search, convex hulls, the
recursive atom decomposition, the triangulation-based baseline and the
brute-force oracles used to check them.
"""

from .mcs import AFTER, BEFORE, is_valid_mcs_ordering, mcs_ordering, weight_at
from .hull import close_minimal_separator, convex_hull, is_convex
from .separators import clique_minimal_separators
from .baseline import is_chordal, leimer_decompose, mcs_m
from .decompose import decompose_graph, prda, rda
from .oracle import (
    OracleBudget, brute_atoms, brute_clique_min_seps, brute_hull, brute_is_convex_by_paths
)

__all__ = [
    'AFTER', 'BEFORE', 'is_valid_mcs_ordering', 'mcs_ordering', 'weight_at',
    'close_minimal_separator', 'convex_hull', 'is_convex',
    'clique_minimal_separators',
    'is_chordal', 'leimer_decompose', 'mcs_m',
    'decompose_graph', 'prda', 'rda',
    'OracleBudget', 'brute_atoms', 'brute_clique_min_seps', 'brute_hull', 'brute_is_convex_by_paths',
]
