"""
Triangulation-based atom decomposition, used as a comparator.

MCS-M computes a minimal elimination ordering together with its fill;
the atoms then come from scanning that ordering for higher-numbered
filled neighborhoods that are cliques in the original graph.
"""

import heapq
import logging
import math
import time
from typing import Dict, List, Set, Tuple

from errors import DisconnectedGraphError
from models import AtomSet, Decomposition, Graph, Ordering, TieBreak, Triangulation

from .hull import collect_component
from .mcs import mcs_ordering

logger = logging.getLogger(__name__)


def mcs_m(graph: Graph) -> Triangulation:
    """
    Compute a minimal triangulation with MCS-M.

    The vertex of highest weight is numbered next (lowest id on ties).
    Every unnumbered y reachable from it along a path whose interior
    vertices all weigh less than w(y) gains one weight, and becomes a
    fill neighbor when it is not already adjacent.

    Args:
        graph: Graph to triangulate

    Returns:
        Triangulation with the ordering, fill edges and separator generators

    Raises:
        EmptyGraphError: If the graph has no vertices
    """
    graph.require_vertices()
    n = graph.n
    adjacency = graph.adjacency
    neighbor_sets = graph.neighbor_sets
    weights = [0] * n
    numbered = [False] * n
    alpha = [0] * n
    fill: List[Tuple[int, int]] = []
    generators: List[int] = []
    previous_weight = -1

    for position in range(n, 0, -1):
        z = max((v for v in range(n) if not numbered[v]), key=lambda v: (weights[v], -v))
        if weights[z] <= previous_weight:
            generators.append(z)
        previous_weight = weights[z]
        numbered[z] = True
        alpha[z] = position

        reached = _minimax_reach(adjacency, weights, numbered, z)
        for y, bottleneck in reached.items():
            if bottleneck < weights[y]:
                if y not in neighbor_sets[z]:
                    fill.append((min(y, z), max(y, z)))
        for y, bottleneck in reached.items():
            if bottleneck < weights[y]:
                weights[y] += 1

    logger.debug("MCS-M added %d fill edges to %d vertices", len(fill), n)
    return Triangulation(Ordering(alpha), tuple(sorted(fill)), tuple(generators))


def _minimax_reach(adjacency, weights: List[int], numbered: List[bool], z: int) -> Dict[int, int]:
    """
    For each unnumbered vertex reachable from z through unnumbered vertices,
    the smallest possible maximum interior weight over such paths (-1 for
    direct neighbors).
    """
    best: Dict[int, int] = {}
    heap: List[Tuple[int, int]] = []
    for y in adjacency[z]:
        if not numbered[y]:
            best[y] = -1
            heap.append((-1, y))
    heapq.heapify(heap)
    while heap:
        key, x = heapq.heappop(heap)
        if key > best[x]:
            continue
        through = max(key, weights[x])
        for y in adjacency[x]:
            if not numbered[y] and through < best.get(y, math.inf):
                best[y] = through
                heapq.heappush(heap, (through, y))
    return best


def is_chordal(graph: Graph) -> bool:
    """
    Test chordality with MCS and a perfect elimination ordering check.

    For each vertex, its higher-numbered neighbors minus the lowest of them
    must all be adjacent to that lowest one.
    """
    ordering = mcs_ordering(graph, TieBreak.lowest_id())
    alpha = ordering.alpha
    neighbor_sets = graph.neighbor_sets
    for v in range(graph.n):
        later = [w for w in graph.adjacency[v] if alpha[w] > alpha[v]]
        if not later:
            continue
        parent = min(later, key=alpha.__getitem__)
        adjacent = neighbor_sets[parent]
        if any(w != parent and w not in adjacent for w in later):
            return False
    return True


def leimer_decompose(graph: Graph) -> Decomposition:
    """
    Decompose a connected graph through a minimal triangulation.

    Generators are scanned in elimination order (alpha = 1 first). When
    the higher-numbered filled neighborhood S of a generator x is a clique
    in the original graph, the component of x outside S is split off
    together with S; whatever remains at the end is the last atom.

    Raises:
        EmptyGraphError: If the graph has no vertices
        DisconnectedGraphError: If the graph is not connected
    """
    graph.require_vertices()
    if not graph.is_connected():
        raise DisconnectedGraphError(f"Graph with {graph.n} vertices is not connected")
    start = time.perf_counter()

    triangulation = mcs_m(graph)
    alpha = triangulation.ordering.alpha
    filled: List[Set[int]] = [set(neighbors) for neighbors in graph.adjacency]
    for u, v in triangulation.fill_edges:
        filled[u].add(v)
        filled[v].add(u)

    adjacency = graph.adjacency
    remaining = set(range(graph.n))
    candidates: List[Set[int]] = []
    for x in sorted(triangulation.generators, key=alpha.__getitem__):
        if x not in remaining:
            continue
        separator = {y for y in filled[x] if alpha[y] > alpha[x] and y in remaining}
        if not separator or not graph.is_complete(separator):
            continue
        component = collect_component(adjacency, x, lambda w: w in remaining and w not in separator)
        if len(component) + len(separator) < len(remaining):
            candidates.append(component | separator)
            remaining -= component
    candidates.append(remaining)

    atoms = AtomSet.from_candidates(candidates)
    wall_time = time.perf_counter() - start
    logger.info("baseline found %d atoms on %d vertices (%.4fs)", len(atoms), graph.n, wall_time)
    return Decomposition(atoms, "baseline", TieBreak.LOWEST_ID, wall_time, None, triangulation.ordering)
