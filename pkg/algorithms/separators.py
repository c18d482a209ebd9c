"""
Clique minimal separator extraction from a finished atom set.

For an atom H and a component M of the graph outside H, N(M) is a clique
minimal separator; every clique minimal separator arises this way.
"""

import logging
from collections import deque
from typing import Iterable, List, Set

from models import Graph, VertexSet

logger = logging.getLogger(__name__)


def clique_minimal_separators(graph: Graph, atoms: Iterable[Iterable[int]]) -> List[VertexSet]:
    """
    Collect N(M) over every atom H and every component M of G outside H.

    Args:
        graph: The decomposed graph
        atoms: Its atoms (an AtomSet or any iterable of vertex sets)

    Returns:
        Deduplicated non-empty separators in canonical (size, members) order
    """
    adjacency = graph.adjacency
    n = graph.n
    stamp = [-1] * n
    found: Set[VertexSet] = set()

    for index, atom in enumerate(atoms):
        inside = atom.lookup if isinstance(atom, VertexSet) else frozenset(atom)
        for v in inside:
            stamp[v] = index
        for start in range(n):
            if stamp[start] == index:
                continue
            stamp[start] = index
            boundary = set()
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in adjacency[x]:
                    if y in inside:
                        boundary.add(y)
                    elif stamp[y] != index:
                        stamp[y] = index
                        queue.append(y)
            if boundary:
                found.add(VertexSet(boundary))

    separators = sorted(found, key=lambda s: s.sort_key)
    logger.debug("Extracted %d clique minimal separators", len(separators))
    return separators
