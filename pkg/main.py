"""
Atom Decomposer - clique minimal separator decomposition of graphs

This program splits undirected graphs into atoms, the maximal connected
subgraphs without a clique minimal separator. The default algorithm
needs no triangulation: it grows convex hulls along a Maximum
Cardinality Search ordering.

Commands:
- decompose: atoms (and separators) of an edge-list graph, as JSON
- verify: check a result document against its graph
- bench: repeat-averaged timings of the algorithms on several graphs
- hull: convex hull of a set of vertices
- order: MCS ordering of a graph
"""

import argparse
import logging
import sys
from typing import List, Optional

from config import (
    ALGORITHMS, BENCH_DEFAULT_REPEATS, BENCH_TIMEOUT_SECONDS, DEFAULT_ALGORITHM,
    DEFAULT_TIE_BREAK, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, LOG_FORMAT
)
from errors import AtomDecomposerError, OracleBudgetExceeded
from models import TieBreak
from algorithms import convex_hull, decompose_graph, mcs_ordering
from utils import (
    ResultDocument, load_edge_list_file, print_bench_table, print_decomposition,
    print_graph_info, print_hull, print_ordering, print_verification,
    read_result_document, write_result_document
)

logger = logging.getLogger("atom_decomposer")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atom-decomposer",
        description="Decompose undirected graphs into atoms (maximal prime subgraphs).")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress (-v for INFO, -vv for DEBUG)")
    commands = parser.add_subparsers(dest="command", required=True)

    decompose = commands.add_parser("decompose", help="Decompose a graph into atoms")
    decompose.add_argument("input", help="Edge-list file")
    decompose.add_argument("--algorithm", choices=ALGORITHMS, default=DEFAULT_ALGORITHM)
    decompose.add_argument("--tie-break", default=DEFAULT_TIE_BREAK,
                           help="MCS tie-break: lowest-id or random:<seed>")
    decompose.add_argument("--output", "-o", help="Write the result document here (default: stdout)")
    decompose.add_argument("--separators", action=argparse.BooleanOptionalAction, default=True,
                           help="Extract clique minimal separators")
    decompose.add_argument("--show-ordering", action="store_true", help="Print the MCS ordering")
    decompose.add_argument("--draw", metavar="PATH", help="Save a drawing of the atoms")
    decompose.add_argument("--show", action="store_true", help="Open the drawing in a window")
    decompose.set_defaults(handler=cmd_decompose)

    verify = commands.add_parser("verify", help="Check a result document against its graph")
    verify.add_argument("input", help="Edge-list file")
    verify.add_argument("result", help="Result document written by decompose")
    verify.set_defaults(handler=cmd_verify)

    bench = commands.add_parser("bench", help="Benchmark the algorithms")
    bench.add_argument("inputs", nargs="+", help="Edge-list files")
    bench.add_argument("--algorithm", dest="algorithms", action="append", choices=ALGORITHMS,
                       help="Algorithm to run (repeatable; default: rda and baseline)")
    bench.add_argument("--tie-break", default=DEFAULT_TIE_BREAK)
    bench.add_argument("--repeats", type=int, default=BENCH_DEFAULT_REPEATS)
    bench.add_argument("--timeout-seconds", type=float, default=BENCH_TIMEOUT_SECONDS)
    bench.add_argument("--csv", metavar="PATH", help="Also write the rows as CSV")
    bench.set_defaults(handler=cmd_bench)

    hull = commands.add_parser("hull", help="Convex hull of a vertex set")
    hull.add_argument("input", help="Edge-list file")
    hull.add_argument("seed", nargs="+", help="Vertex labels of the seed set")
    hull.set_defaults(handler=cmd_hull)

    order = commands.add_parser("order", help="Print the MCS ordering of a graph")
    order.add_argument("input", help="Edge-list file")
    order.add_argument("--tie-break", default=DEFAULT_TIE_BREAK)
    order.set_defaults(handler=cmd_order)
    return parser


def cmd_decompose(args: argparse.Namespace) -> int:
    """Decompose one graph and write its result document."""
    graph = load_edge_list_file(args.input)
    tie_break = TieBreak.parse(args.tie_break)
    decomposition = decompose_graph(graph, args.algorithm, tie_break, separators=args.separators)
    document = ResultDocument.from_decomposition(decomposition, graph)

    if args.output:
        write_result_document(document, args.output)
        print_graph_info(graph, args.input)
        print_decomposition(graph, decomposition)
        print(f"Result written to {args.output}")
    else:
        write_result_document(document, sys.stdout)

    if args.show_ordering:
        ordering = decomposition.ordering or mcs_ordering(graph, tie_break)
        # stdout carries the document when no --output is given
        print_ordering(graph, ordering, sys.stdout if args.output else sys.stderr)

    if args.draw or args.show:
        from utils.visualization import draw_decomposition
        try:
            draw_decomposition(graph, decomposition, path=args.draw, show=args.show)
        except Exception as e:
            print(f"Error drawing decomposition: {e}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Exit 0 when every invariant holds, 1 otherwise."""
    from utils.verification import verify_decomposition

    graph = load_edge_list_file(args.input)
    document = read_result_document(args.result)
    report = verify_decomposition(graph, document.atoms, document.separators)
    print_verification(report)
    return EXIT_OK if report.passed else EXIT_FAILURE


def cmd_bench(args: argparse.Namespace) -> int:
    """Run the benchmark; exit 1 when any run was skipped."""
    from utils.benchmark import run_benchmark

    algorithms = args.algorithms or ["rda", "baseline"]
    report = run_benchmark(args.inputs, algorithms, repeats=args.repeats,
                           timeout_seconds=args.timeout_seconds,
                           tie_break=TieBreak.parse(args.tie_break))
    print_bench_table(report)
    if args.csv:
        report.write_csv(args.csv)
        print(f"Rows written to {args.csv}")
    return EXIT_FAILURE if any(row.skipped for row in report.rows) else EXIT_OK


def cmd_hull(args: argparse.Namespace) -> int:
    graph = load_edge_list_file(args.input)
    seed = graph.ids_of(args.seed)
    print_hull(graph, seed, convex_hull(graph, seed))
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    graph = load_edge_list_file(args.input)
    print_ordering(graph, mcs_ordering(graph, TieBreak.parse(args.tie_break)))
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> None:
    """
    Entry point of the atom-decomposer command.

    Library errors are caught here and turned into exit codes: 2 for
    unreadable or malformed input and bad arguments, 1 for failed checks.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)

    try:
        status = args.handler(args)
    except KeyboardInterrupt:
        print("\nInterrupted by user.", file=sys.stderr)
        status = EXIT_FAILURE
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        status = EXIT_USAGE
    except OracleBudgetExceeded as e:
        print(f"Error: {e}", file=sys.stderr)
        status = EXIT_FAILURE
    except (AtomDecomposerError, ValueError) as e:
        print(f"Error: {e}", file=sys.stderr)
        status = EXIT_USAGE
    sys.exit(status)


if __name__ == "__main__":
    main()
