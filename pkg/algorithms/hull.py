"""
Convexity and convex hulls in undirected graphs.

A vertex set A is convex when every connected component C of the graph
outside A has a complete neighborhood N(C). The convex hull of R is the
unique smallest convex set containing R; it is computed by repeatedly
absorbing the minimal separator closest to one endpoint of a
non-adjacent pair in some N(C).
"""

import heapq
import logging
from collections import deque
from typing import Callable, Collection, Iterable, List, Optional, Set, Tuple

from errors import EmptyGraphError, SeparatorError
from models import Graph, VertexSet

logger = logging.getLogger(__name__)

AbsorbCallback = Callable[[VertexSet], None]


def is_convex(graph: Graph, vertices: Iterable[int]) -> bool:
    """
    Return True if the vertex set is convex in the graph.

    Every component C of G restricted to V \\ A must have N(C) complete.
    """
    inside = graph.check_vertices(vertices).lookup
    outside = set(range(graph.n)) - inside
    for component in graph.connected_components(outside):
        if not graph.is_complete(graph.neighborhood(component)):
            return False
    return True


def convex_hull(graph: Graph, seed: Iterable[int],
                on_absorb: Optional[AbsorbCallback] = None) -> VertexSet:
    """
    Compute the convex hull containing the seed set R.

    Args:
        graph: Graph to work in
        seed: The non-empty set R
        on_absorb: Called with every separator absorbed into the hull

    Returns:
        The hull H, with R ⊆ H and H convex and inclusion-minimal

    Raises:
        EmptyGraphError: If R is empty
        InvalidVertexError: If R has an out-of-range id
    """
    members = graph.check_vertices(seed)
    if not members:
        raise EmptyGraphError("The hull seed set R must not be empty")
    hull = expand_hull(graph, range(graph.n), members.lookup, on_absorb)
    return VertexSet(hull)


def close_minimal_separator(graph: Graph, component: Iterable[int], u: int, v: int) -> VertexSet:
    """
    Return the minimal u-v separator inside C that lies closest to u.

    Works in the graph induced on C ∪ {u, v}: S0 = N(u), C_v is the
    component of v once S0 is deleted, and the answer is N(C_v).

    Raises:
        SeparatorError: If u and v are adjacent, or v cannot be reached
            from u through C
    """
    members = set(graph.check_vertices(component))
    if graph.has_edge(u, v):
        raise SeparatorError(f"Vertices {u} and {v} are adjacent; no separator exists")
    return VertexSet(_close_separator(graph, members, u, v))


def expand_hull(graph: Graph, region: Collection[int], seed: Iterable[int],
                on_absorb: Optional[AbsorbCallback] = None) -> Set[int]:
    """
    Hull of the seed inside the subgraph induced on region.

    Only complement components touching the hull are explored; a
    component that fails the completeness test is split after the
    absorption and its pieces are queued again, other components stay
    untouched because their neighborhoods cannot change.
    """
    neighbor_sets = graph.neighbor_sets
    hull = set(seed)
    if _first_missing_pair(neighbor_sets, hull) is None:
        return hull

    adjacency = graph.adjacency
    queued: Set[int] = set()
    pending: List[Tuple[int, int, Set[int]]] = []
    counter = 0
    for a in hull:
        for w in adjacency[a]:
            if w in region and w not in hull and w not in queued:
                component = collect_component(adjacency, w, lambda x: x in region and x not in hull)
                queued |= component
                heapq.heappush(pending, (min(component), counter, component))
                counter += 1

    absorptions = 0
    while pending:
        _, _, component = heapq.heappop(pending)
        boundary = _boundary(adjacency, component, region)
        pair = _first_missing_pair(neighbor_sets, boundary)
        if pair is None:
            continue
        separator = _close_separator(graph, component, pair[0], pair[1])
        hull |= separator
        absorptions += 1
        if on_absorb is not None:
            on_absorb(VertexSet(separator))

        rest = component - separator
        while rest:
            start = next(iter(rest))
            piece = collect_component(adjacency, start, rest.__contains__)
            rest -= piece
            heapq.heappush(pending, (min(piece), counter, piece))
            counter += 1

    logger.debug("Hull of %d seed vertices has %d vertices after %d absorptions",
                 len(set(seed)), len(hull), absorptions)
    return hull


def collect_component(adjacency, start: int, allowed: Callable[[int], bool]) -> Set[int]:
    """Vertices reachable from start through vertices accepted by allowed."""
    component = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y not in component and allowed(y):
                component.add(y)
                queue.append(y)
    return component


def _boundary(adjacency, component: Set[int], region: Collection[int]) -> Set[int]:
    boundary = set()
    for x in component:
        for y in adjacency[x]:
            if y not in component and y in region:
                boundary.add(y)
    return boundary


def _first_missing_pair(neighbor_sets, vertices: Iterable[int]) -> Optional[Tuple[int, int]]:
    """Lexicographically smallest non-adjacent pair, or None if complete."""
    members = sorted(vertices)
    for i, u in enumerate(members):
        adjacent = neighbor_sets[u]
        for v in members[i + 1:]:
            if v not in adjacent:
                return u, v
    return None


def _close_separator(graph: Graph, component: Set[int], u: int, v: int) -> Set[int]:
    adjacency = graph.adjacency
    near_u = {w for w in adjacency[u] if w in component}
    separator: Set[int] = set()
    reached = {v}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in adjacency[x]:
            if y in near_u:
                separator.add(y)
            elif y in component and y not in reached:
                reached.add(y)
                queue.append(y)
    if not separator:
        raise SeparatorError(f"Vertex {v} cannot be reached from {u} through the component")
    return separator
