"""
Maximum Cardinality Search.

Vertices are numbered from n down to 1; each step picks an unnumbered
vertex of maximum weight, where the weight counts already-numbered
neighbors. Ties are settled by a TieBreak rule.
"""

import heapq
import logging
from typing import Iterable, List, Optional, Tuple, Union

from errors import InvalidOrderingError, TraceError
from models import Graph, McsTrace, Ordering, TieBreak, TraceStep

logger = logging.getLogger(__name__)

BEFORE = "-"
AFTER = "+"


def mcs_ordering(graph: Graph, tie_break: Optional[TieBreak] = None,
                 record_trace: bool = False) -> Ordering:
    """
    Compute an MCS ordering of the graph.

    Weights live in per-weight buckets; each bucket is a heap keyed by the
    tie-break rank, with stale entries discarded lazily.

    Args:
        graph: Graph to order
        tie_break: Rule for equal weights (default: lowest id)
        record_trace: Whether to snapshot all weights around every step

    Returns:
        Ordering alpha, with its trace when requested

    Raises:
        EmptyGraphError: If the graph has no vertices
    """
    graph.require_vertices()
    tie_break = tie_break or TieBreak.lowest_id()
    n = graph.n
    adjacency = graph.adjacency
    ranks = tie_break.ranks(n)

    weights = [0] * n
    numbered = [False] * n
    alpha = [0] * n
    buckets: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    buckets[0] = sorted((ranks[v], v) for v in range(n))
    top = 0
    steps: List[TraceStep] = []

    for position in range(n, 0, -1):
        while True:
            while not buckets[top]:
                top -= 1
            _, v = heapq.heappop(buckets[top])
            if not numbered[v] and weights[v] == top:
                break

        before = tuple(weights) if record_trace else ()
        numbered[v] = True
        alpha[v] = position
        for w in adjacency[v]:
            if not numbered[w]:
                weights[w] += 1
                heapq.heappush(buckets[weights[w]], (ranks[w], w))
                if weights[w] > top:
                    top = weights[w]
        if record_trace:
            steps.append(TraceStep(v, position, before, tuple(weights)))

    logger.debug("MCS ordered %d vertices (tie-break %s)", n, tie_break)
    return Ordering(alpha, McsTrace(steps) if record_trace else None)


def is_valid_mcs_ordering(graph: Graph, ordering: Ordering) -> bool:
    """
    Check that replaying the ordering obeys the MCS selection rule.

    Positions are replayed from n down to 1; the vertex at each position
    must have a weight no smaller than any still-unnumbered vertex.

    Raises:
        InvalidOrderingError: If the ordering does not cover the graph's vertices
    """
    n = graph.n
    if ordering.n != n:
        raise InvalidOrderingError(f"Ordering covers {ordering.n} vertices, graph has {n}")
    adjacency = graph.adjacency
    weights = [0] * n
    numbered = [False] * n
    count = [0] * (n + 1)
    count[0] = n
    top = 0

    for position in range(n, 0, -1):
        v = ordering.vertex_at(position)
        while top > 0 and count[top] == 0:
            top -= 1
        if weights[v] != top:
            return False
        numbered[v] = True
        count[weights[v]] -= 1
        for w in adjacency[v]:
            if not numbered[w]:
                count[weights[w]] -= 1
                weights[w] += 1
                count[weights[w]] += 1
                if weights[w] > top:
                    top = weights[w]
    return True


def weight_at(trace: Union[McsTrace, Ordering, None], vertex: int, moment: str,
              vertices: Iterable[int]) -> int:
    """
    Highest weight among the unnumbered members of A at a timestamp.

    Args:
        trace: Recorded trace (or an Ordering carrying one)
        vertex: The vertex u whose numbering defines the timestamp
        moment: BEFORE ('-') for u-, AFTER ('+') for u+
        vertices: The set A

    Raises:
        TraceError: If no trace was recorded, the moment is unknown, or
            every member of A is already numbered at the timestamp
    """
    if isinstance(trace, Ordering):
        trace = trace.trace
    if trace is None:
        raise TraceError("The ordering was computed without a weight trace")
    if moment not in (BEFORE, AFTER):
        raise TraceError(f"Unknown timestamp {moment!r}; use '{BEFORE}' or '{AFTER}'")

    step = trace.step_for(vertex)
    snapshot = step.weights_before if moment == BEFORE else step.weights_after
    # At u- the vertex u itself is still unnumbered.
    unnumbered = [w for w in vertices
                  if trace.step_for(w).position < step.position
                  or (moment == BEFORE and w == vertex)]
    if not unnumbered:
        raise TraceError(f"Every vertex of the set is numbered at {vertex}{moment}")
    return max(snapshot[w] for w in unnumbered)
