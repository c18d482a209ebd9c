"""
Benchmark harness: repeat-averaged decomposition timings.

Each (graph, algorithm) pair runs in its own single-worker process so a
run that exceeds the timeout can be killed; the row is then marked as
skipped. Only the decomposition is timed, never the parsing.
"""

import csv
import logging
import multiprocessing
import os
import platform
import timeit
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config import BENCH_DEFAULT_REPEATS, BENCH_SKIPPED_MARK, BENCH_TIMEOUT_SECONDS
from models import Graph, TieBreak
from algorithms.decompose import decompose_graph
from utils.input_handler import load_edge_list_file

logger = logging.getLogger(__name__)

STATUS_OK = "ok"
STATUS_TIMEOUT = "timeout"

CSV_HEADER = ["graph", "n", "m", "algorithm", "repeats", "mean", "std", "status", "atoms"]


@dataclass
class BenchRow:
    """Timing summary for one (graph, algorithm) pair."""
    graph: str
    n: int
    m: int
    algorithm: str
    repeats: int
    mean: Optional[float] = None
    std: Optional[float] = None
    status: str = STATUS_OK
    atoms: Optional[int] = None

    @property
    def skipped(self) -> bool:
        return self.status != STATUS_OK

    def formatted_mean(self) -> str:
        return BENCH_SKIPPED_MARK if self.skipped else f"{self.mean:.4f}"

    def as_csv_row(self) -> List[object]:
        if self.skipped:
            return [self.graph, self.n, self.m, self.algorithm, self.repeats,
                    BENCH_SKIPPED_MARK, BENCH_SKIPPED_MARK, self.status, ""]
        return [self.graph, self.n, self.m, self.algorithm, self.repeats,
                f"{self.mean:.6f}", f"{self.std:.6f}", self.status, self.atoms]


@dataclass
class BenchReport:
    """Rows in input order plus a description of the host."""
    rows: List[BenchRow] = field(default_factory=list)
    environment: str = ""

    @property
    def algorithms(self) -> List[str]:
        seen: List[str] = []
        for row in self.rows:
            if row.algorithm not in seen:
                seen.append(row.algorithm)
        return seen

    def row_for(self, graph: str, algorithm: str) -> Optional[BenchRow]:
        for row in self.rows:
            if row.graph == graph and row.algorithm == algorithm:
                return row
        return None

    def write_csv(self, path: Union[str, Path]) -> None:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            for row in self.rows:
                writer.writerow(row.as_csv_row())


def describe_environment() -> str:
    """One-line host description for the report footer."""
    return (f"{platform.platform()}; Python {platform.python_version()}; "
            f"{os.cpu_count()} CPUs; numpy {np.__version__}")


def summarize(times: Sequence[float]) -> Tuple[float, float]:
    """
    Mean and sample standard deviation of the timings.

    The deviation of a single timing is 0.
    """
    values = np.asarray(times, dtype=float)
    if values.size == 0:
        raise ValueError("No timings to summarize")
    std = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return float(np.mean(values)), std


def time_decomposition(graph: Graph, algorithm: str, repeats: int = BENCH_DEFAULT_REPEATS,
                       tie_break: Optional[TieBreak] = None) -> Tuple[List[float], int]:
    """
    Time `repeats` decompositions of an already loaded graph.

    Returns:
        Tuple of the per-run wall times and the atom count

    Raises:
        ValueError: If repeats is smaller than 1
    """
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    result = {}

    def run() -> None:
        result["decomposition"] = decompose_graph(graph, algorithm, tie_break, separators=False)

    times = timeit.repeat(run, number=1, repeat=repeats)
    return times, len(result["decomposition"].atoms)


def _bench_in_child(graph: Graph, algorithm: str, repeats: int,
                    tie_break: Optional[str]) -> Tuple[List[float], int]:
    return time_decomposition(graph, algorithm, repeats, TieBreak.parse(tie_break))


def run_benchmark(paths: Sequence[Union[str, Path]], algorithms: Sequence[str],
                  repeats: int = BENCH_DEFAULT_REPEATS,
                  timeout_seconds: float = BENCH_TIMEOUT_SECONDS,
                  tie_break: Optional[TieBreak] = None) -> BenchReport:
    """
    Benchmark every algorithm on every graph file.

    Args:
        paths: Edge-list files, benchmarked in order
        algorithms: Algorithm names
        repeats: Runs per (graph, algorithm)
        timeout_seconds: Budget for all runs of one (graph, algorithm)
        tie_break: MCS tie-break rule

    Returns:
        BenchReport with one row per (graph, algorithm), in input order

    Raises:
        ValueError: If repeats or the timeout are not positive
        EdgeListParseError: If an input file is malformed
    """
    if repeats < 1:
        raise ValueError(f"repeats must be at least 1, got {repeats}")
    if timeout_seconds <= 0:
        raise ValueError(f"timeout must be positive, got {timeout_seconds}")
    tie_break_text = str(tie_break) if tie_break is not None else None
    report = BenchReport(environment=describe_environment())

    for path in paths:
        graph = load_edge_list_file(path)
        name = Path(path).stem
        for algorithm in algorithms:
            row = BenchRow(name, graph.n, graph.m, algorithm, repeats)
            logger.info("Benchmarking %s on %s (%d repeats)", algorithm, name, repeats)
            with multiprocessing.Pool(processes=1) as pool:
                pending = pool.apply_async(_bench_in_child, (graph, algorithm, repeats, tie_break_text))
                try:
                    times, atoms = pending.get(timeout_seconds)
                except multiprocessing.TimeoutError:
                    logger.warning("%s on %s exceeded %.0f s; marking it skipped",
                                   algorithm, name, timeout_seconds)
                    row.status = STATUS_TIMEOUT
                else:
                    row.mean, row.std = summarize(times)
                    row.atoms = atoms
            report.rows.append(row)
    return report
