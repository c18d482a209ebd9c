"""
Invariant checks for a decomposition given in label form.

Each failed check is reported under the name of the invariant it
violates, so the verify command can list every problem at once.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from config import ORACLE_MAX_VERTICES
from errors import InvalidVertexError
from models import Graph, VertexSet
from algorithms.decompose import decompose_graph
from algorithms.oracle import brute_clique_min_seps

logger = logging.getLogger(__name__)

LABELS = "labels"
COVERAGE = "coverage"
EDGE_COVERAGE = "edge-coverage"
ANTICHAIN = "antichain"
PRIMALITY = "primality"
AGREEMENT = "agreement"
SEPARATOR_COMPLETE = "separator-complete"
SEPARATOR_MINIMAL = "separator-minimal"

INVARIANTS = (LABELS, COVERAGE, EDGE_COVERAGE, ANTICHAIN, PRIMALITY, AGREEMENT,
              SEPARATOR_COMPLETE, SEPARATOR_MINIMAL)


@dataclass(frozen=True)
class Violation:
    invariant: str
    detail: str

    def __str__(self) -> str:
        return f"[{self.invariant}] {self.detail}"


@dataclass
class VerificationReport:
    """Outcome of verify_decomposition."""
    violations: List[Violation] = field(default_factory=list)
    atoms_checked: int = 0
    separators_checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed_invariants(self) -> List[str]:
        return [name for name in INVARIANTS if any(v.invariant == name for v in self.violations)]

    def add(self, invariant: str, detail: str) -> None:
        self.violations.append(Violation(invariant, detail))


def verify_decomposition(graph: Graph, atoms: Sequence[Sequence[str]],
                         separators: Optional[Sequence[Sequence[str]]] = None,
                         primality_limit: int = ORACLE_MAX_VERTICES) -> VerificationReport:
    """
    Check a claimed decomposition of the graph.

    Args:
        graph: The decomposed graph
        atoms: Atoms as label lists
        separators: Clique minimal separators as label lists, if claimed
        primality_limit: Largest atom checked with the separator oracle

    Returns:
        VerificationReport listing every violation found
    """
    report = VerificationReport()
    atom_sets = _resolve(graph, atoms, "atom", report)
    separator_sets = _resolve(graph, separators or [], "separator", report)
    report.atoms_checked = len(atom_sets)
    report.separators_checked = len(separator_sets)

    covered = set()
    for atom in atom_sets:
        covered.update(atom)
    missing = [v for v in range(graph.n) if v not in covered]
    if missing:
        report.add(COVERAGE, f"vertices in no atom: {graph.labels_of(missing)}")

    for u, v in graph.edges():
        if not any(u in atom and v in atom for atom in atom_sets):
            report.add(EDGE_COVERAGE, f"edge {graph.label(u)}-{graph.label(v)} lies in no atom")

    for i, first in enumerate(atom_sets):
        for j, second in enumerate(atom_sets):
            if i != j and first.issubset(second) and (len(first) < len(second) or i < j):
                report.add(ANTICHAIN, f"atom {graph.labels_of(first)} is contained in {graph.labels_of(second)}")

    for atom in atom_sets:
        _check_primality(graph, atom, primality_limit, report)

    expected = {atom for atom in decompose_graph(graph, "rda", separators=False).atoms}
    if set(atom_sets) != expected:
        extra = [graph.labels_of(a) for a in set(atom_sets) - expected]
        absent = [graph.labels_of(a) for a in expected - set(atom_sets)]
        report.add(AGREEMENT, f"differs from a fresh decomposition: unexpected {extra}, missing {absent}")

    everything = set(range(graph.n))
    for separator in separator_sets:
        labels = graph.labels_of(separator)
        if not graph.is_complete(separator):
            report.add(SEPARATOR_COMPLETE, f"separator {labels} is not complete")
        components = graph.connected_components(everything - separator.lookup) if separator else []
        full = sum(1 for c in components if graph.neighborhood(c) == separator)
        if full < 2:
            report.add(SEPARATOR_MINIMAL, f"separator {labels} has {full} full components, needs 2")

    logger.info("Verified %d atoms and %d separators: %d violations",
                report.atoms_checked, report.separators_checked, len(report.violations))
    return report


def _resolve(graph: Graph, sets: Sequence[Sequence[str]], kind: str,
             report: VerificationReport) -> List[VertexSet]:
    resolved = []
    for labels in sets:
        ids = []
        for label in labels:
            try:
                ids.append(graph.id_of(label))
            except InvalidVertexError:
                report.add(LABELS, f"{kind} {list(labels)} names unknown vertex {label!r}")
        resolved.append(VertexSet(ids))
    return resolved


def _check_primality(graph: Graph, atom: VertexSet, limit: int, report: VerificationReport) -> None:
    labels = graph.labels_of(atom)
    if not atom:
        report.add(PRIMALITY, "empty atom")
        return
    sub = graph.induced(atom)
    if not sub.is_connected():
        report.add(PRIMALITY, f"atom {labels} is not connected")
        return
    if len(atom) <= limit:
        separators = brute_clique_min_seps(sub)
        if separators:
            report.add(PRIMALITY, f"atom {labels} has clique minimal separator {sub.labels_of(separators[0])}")
