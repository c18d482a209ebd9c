"""
Utilities package for Atom Decomposer application.

This package contains utility functions for input handling, display
formatting and graph generation. Benchmarking, verification and
visualization live in their own modules (utils.benchmark,
utils.verification, utils.visualization) because they depend on the
algorithms package.
"""

from .input_handler import (
    ResultDocument, load_edge_list, load_edge_list_file, load_edge_list_with_report,
    read_result_document, write_result_document
)
from .display import (
    print_bench_table, print_decomposition, print_graph_info, print_hull,
    print_ordering, print_verification
)
from .generators import (
    from_networkx, random_graph_with_trees, seeded_gnp, to_networkx, write_edge_list
)

__all__ = [
    'ResultDocument', 'load_edge_list', 'load_edge_list_file', 'load_edge_list_with_report',
    'read_result_document', 'write_result_document',
    'print_bench_table', 'print_decomposition', 'print_graph_info', 'print_hull',
    'print_ordering', 'print_verification',
    'from_networkx', 'random_graph_with_trees', 'seeded_gnp', 'to_networkx', 'write_edge_list',
]
