"""
Display utilities for the Atom Decomposer application.

This module handles the text output of the command-line front end.
"""

from typing import Iterable, List, Optional, TextIO

from models import Decomposition, Graph, Ordering


def print_graph_info(graph: Graph, source: str) -> None:
    """
    Print the size of a loaded graph.

    Args:
        graph: The loaded graph
        source: Where it came from (file name)
    """
    print(f"Graph {source}: {graph.n} vertices, {graph.m} edges")


def print_decomposition(graph: Graph, decomposition: Decomposition) -> None:
    """
    Print the atoms and, when present, the clique minimal separators.

    Args:
        graph: The decomposed graph
        decomposition: Its decomposition
    """
    atoms = decomposition.atoms_as_labels(graph)
    print(f"\nAlgorithm: {decomposition.algorithm} (tie-break {decomposition.tie_break})")
    print(f"Atoms: {len(atoms)}")
    for i, labels in enumerate(atoms, start=1):
        print(f"  {i:>4}. {{{', '.join(labels)}}}")
    if decomposition.separators is not None:
        separators = decomposition.separators_as_labels(graph)
        print(f"Clique minimal separators: {len(separators)}")
        for i, labels in enumerate(separators, start=1):
            print(f"  {i:>4}. {{{', '.join(labels)}}}")
    print(f"Wall time: {decomposition.wall_time:.4f} s")


def print_ordering(graph: Graph, ordering: Ordering, stream: Optional[TextIO] = None) -> None:
    """Print the ordering as position: label lines, position 1 first, to stdout unless a stream is given."""
    print("\nMCS ordering (alpha):", file=stream)
    for position, v in enumerate(ordering.sequence(), start=1):
        print(f"  {position:>4}: {graph.label(v)}", file=stream)


def print_hull(graph: Graph, seed: Iterable[int], hull: Iterable[int]) -> None:
    print(f"Seed: {{{', '.join(graph.labels_of(seed))}}}")
    print(f"Convex hull: {{{', '.join(graph.labels_of(hull))}}}")


def print_verification(report) -> None:
    """
    Print a verification report.

    Args:
        report: VerificationReport from utils.verification
    """
    print(f"Checked {report.atoms_checked} atoms and {report.separators_checked} separators")
    if report.passed:
        print("All invariants hold")
        return
    print(f"FAILED: {', '.join(report.failed_invariants())}")
    for violation in report.violations:
        print(f"  {violation}")


def print_bench_table(report) -> None:
    """
    Print benchmark rows as a table: one line per graph, one time column
    per algorithm, skipped runs marked with the skip mark.

    Args:
        report: BenchReport from utils.benchmark
    """
    algorithms: List[str] = report.algorithms
    graphs: List[str] = []
    for row in report.rows:
        if row.graph not in graphs:
            graphs.append(row.graph)

    name_width = max([len("Network")] + [len(g) for g in graphs])
    header = f"{'Network':<{name_width}}  {'Nodes':>8}  {'Edges':>9}"
    header += "".join(f"  {algorithm:>12}" for algorithm in algorithms)
    print(header)
    print("-" * len(header))
    for name in graphs:
        first = next(row for row in report.rows if row.graph == name)
        line = f"{name:<{name_width}}  {first.n:>8}  {first.m:>9}"
        for algorithm in algorithms:
            row = report.row_for(name, algorithm)
            line += f"  {row.formatted_mean() if row else '':>12}"
        print(line)
    if report.rows:
        print(f"\nMean wall time in seconds over {report.rows[0].repeats} runs")
    print(f"Environment: {report.environment}")
