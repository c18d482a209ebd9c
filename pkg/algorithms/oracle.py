"""
Exhaustive reference implementations for small graphs.

Everything here enumerates vertex subsets, so inputs are capped by an
OracleBudget. These functions exist to check the fast algorithms.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import networkx as nx

from config import ORACLE_HULL_MAX_VERTICES, ORACLE_MAX_SUBSETS, ORACLE_MAX_VERTICES
from errors import DisconnectedGraphError, EmptyGraphError, OracleBudgetExceeded
from models import AtomSet, Graph, VertexSet
from utils.generators import to_networkx

from .hull import is_convex

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleBudget:
    """Size limits for exhaustive enumeration."""
    max_vertices: int = ORACLE_MAX_VERTICES
    max_hull_vertices: int = ORACLE_HULL_MAX_VERTICES
    max_subsets: int = ORACLE_MAX_SUBSETS

    def check(self, graph: Graph, limit: Optional[int] = None) -> None:
        """
        Raises:
            OracleBudgetExceeded: If the graph is too large to enumerate
        """
        limit = self.max_vertices if limit is None else limit
        if graph.n > limit:
            raise OracleBudgetExceeded(f"Graph has {graph.n} vertices; the oracle accepts at most {limit}")
        if 2 ** graph.n > self.max_subsets:
            raise OracleBudgetExceeded(
                f"Graph with {graph.n} vertices needs {2 ** graph.n} subsets; the cap is {self.max_subsets}")


DEFAULT_BUDGET = OracleBudget()


def brute_clique_min_seps(graph: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> List[VertexSet]:
    """
    Find every clique minimal separator by subset enumeration.

    A non-empty complete set S qualifies when G minus S has at least two
    full components X, meaning N(X) = S.

    Returns:
        Separators in canonical (size, members) order
    """
    budget.check(graph)
    everything = set(range(graph.n))
    separators = []
    for size in range(1, graph.n - 1):
        for members in itertools.combinations(range(graph.n), size):
            if not graph.is_complete(members):
                continue
            separator = VertexSet(members)
            full = 0
            for component in graph.connected_components(everything - separator.lookup):
                if graph.neighborhood(component) == separator:
                    full += 1
            if full >= 2:
                separators.append(separator)
    return separators


def brute_atoms(graph: Graph, budget: OracleBudget = DEFAULT_BUDGET, first_choice: int = 0) -> AtomSet:
    """
    Atoms by recursive splitting along clique minimal separators.

    With S a separator and A a full component of S, the graph splits into
    A ∪ S and V \\ A; both halves are decomposed again and the maximal
    pieces kept.

    Args:
        graph: Connected graph to decompose
        budget: Enumeration limits
        first_choice: Index of the separator used for the top-level split

    Raises:
        EmptyGraphError: If the graph has no vertices
        DisconnectedGraphError: If the graph is not connected
        OracleBudgetExceeded: If the graph is over budget
        ValueError: If first_choice does not index a separator
    """
    graph.require_vertices()
    budget.check(graph)
    if not graph.is_connected():
        raise DisconnectedGraphError("The atom oracle needs a connected graph")
    pieces = _split(graph, budget, first_choice)
    return AtomSet.from_candidates(pieces)


def _split(graph: Graph, budget: OracleBudget, choice: int) -> List[VertexSet]:
    separators = brute_clique_min_seps(graph, budget)
    if not separators:
        return [graph.vertices]
    if choice >= len(separators):
        raise ValueError(f"Separator index {choice} out of range; the graph has {len(separators)}")

    separator = separators[choice]
    outside = set(range(graph.n)) - separator.lookup
    side = next(c for c in graph.connected_components(outside) if graph.neighborhood(c) == separator)
    pieces = []
    for part in (side.union(separator), graph.vertices.difference(side)):
        sub = graph.induced(part)
        pieces.extend(sub.lift(atom) for atom in _split(sub, budget, 0))
    return pieces


def brute_hull(graph: Graph, seed: Iterable[int], budget: OracleBudget = DEFAULT_BUDGET) -> VertexSet:
    """
    The smallest convex superset of R, by enumeration in increasing size.

    Raises:
        EmptyGraphError: If R is empty
        OracleBudgetExceeded: If the graph is over the hull budget
        AssertionError: If two different convex sets of the minimal size exist
    """
    budget.check(graph, budget.max_hull_vertices)
    members = graph.check_vertices(seed)
    if not members:
        raise EmptyGraphError("The hull seed set R must not be empty")
    others = [v for v in range(graph.n) if v not in members]
    for size in range(len(others) + 1):
        found = [members.union(extra) for extra in itertools.combinations(others, size)
                 if is_convex(graph, members.union(extra))]
        if len(found) > 1:
            raise AssertionError(f"Convex hull of {members} is not unique: {found}")
        if found:
            return found[0]
    return graph.vertices


def brute_is_convex_by_paths(graph: Graph, vertices: Iterable[int],
                             budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """
    Convexity from the path definition.

    A is convex when no two non-adjacent members are joined by a simple
    path whose interior avoids A.
    """
    budget.check(graph)
    members = graph.check_vertices(vertices)
    reference = to_networkx(graph)
    for u, v in itertools.combinations(members, 2):
        if graph.has_edge(u, v):
            continue
        outside = reference.subgraph([w for w in reference if w not in members or w in (u, v)])
        if next(nx.all_simple_paths(outside, u, v), None) is not None:
            return False
    return True
