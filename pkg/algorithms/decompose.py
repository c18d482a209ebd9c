"""
Triangulation-free atom decomposition.

rda walks the graph in MCS order: the hull of N[v] for the first
remaining vertex v is an atom (or lies inside one already found), and the
remaining graph shrinks to N[V \\ H]. prda finds the first hull the same
way and then recurses on every N[M] for the components M outside it,
handing large regions to a worker pool.

Both work on regions of the original immutable graph, so atoms come out
in original ids and no subgraph is ever copied.
"""

import logging
import multiprocessing
import time
from functools import partial
from multiprocessing.pool import ThreadPool
from typing import FrozenSet, List, Optional, Sequence, Set, Tuple

from config import ALGORITHMS, DEFAULT_ALGORITHM, PRDA_MAX_WORKERS, PRDA_PARALLEL_CUTOFF
from errors import DisconnectedGraphError, InvalidOrderingError
from models import AtomSet, Decomposition, Graph, Ordering, TieBreak, VertexSet

from .baseline import leimer_decompose
from .hull import collect_component, expand_hull
from .mcs import is_valid_mcs_ordering, mcs_ordering
from .separators import clique_minimal_separators

logger = logging.getLogger(__name__)

GIVEN_ORDERING = "given-ordering"

Region = FrozenSet[int]


def rda(graph: Graph, ordering: Ordering, separators: bool = False,
        tie_break: Optional[TieBreak] = None) -> Decomposition:
    """
    Decompose a connected graph with the sequential recursive algorithm.

    Args:
        graph: Connected graph to decompose
        ordering: A valid MCS ordering of the graph
        separators: Whether to extract clique minimal separators too
        tie_break: Rule that produced the ordering, recorded in the result

    Returns:
        Decomposition holding exactly the atoms of the graph

    Raises:
        EmptyGraphError: If the graph has no vertices
        DisconnectedGraphError: If the graph is not connected
        InvalidOrderingError: If the ordering is not an MCS ordering of the graph
    """
    _check_inputs(graph, ordering)
    start = time.perf_counter()
    atoms = AtomSet()
    _rda_region(graph, ordering.alpha, range(graph.n), atoms)
    return _finish(graph, atoms, "rda", tie_break, ordering, separators, start)


def prda(graph: Graph, ordering: Ordering, separators: bool = False,
         tie_break: Optional[TieBreak] = None, workers: Optional[int] = PRDA_MAX_WORKERS,
         cutoff: int = PRDA_PARALLEL_CUTOFF, use_processes: bool = False) -> Decomposition:
    """
    Decompose a connected graph with the fork-join recursive algorithm.

    The recursion runs in waves: every region of a wave is expanded to its
    first hull, and the closed neighborhoods of the components outside
    that hull form the next wave. Regions with at least `cutoff` vertices
    go to the pool when a wave holds more than one of them; smaller
    regions are finished sequentially with rda. Hulls from all regions are
    merged with the same containment filter rda applies.

    Args:
        graph: Connected graph to decompose
        ordering: A valid MCS ordering of the graph
        separators: Whether to extract clique minimal separators too
        tie_break: Rule that produced the ordering, recorded in the result
        workers: Pool size (None for the cpu count)
        cutoff: Smallest region size handed to the pool
        use_processes: Use a process pool instead of a thread pool

    Returns:
        Decomposition with the same atoms rda returns

    Raises:
        EmptyGraphError: If the graph has no vertices
        DisconnectedGraphError: If the graph is not connected
        InvalidOrderingError: If the ordering is not an MCS ordering of the graph
        ValueError: If cutoff is smaller than 1
    """
    if cutoff < 1:
        raise ValueError(f"cutoff must be at least 1, got {cutoff}")
    _check_inputs(graph, ordering)
    start = time.perf_counter()
    alpha = ordering.alpha
    candidates: List[VertexSet] = []
    pending: List[Region] = [frozenset(range(graph.n))]
    pool = None
    waves = 0

    try:
        while pending:
            waves += 1
            large = [region for region in pending if len(region) >= cutoff]
            for region in pending:
                if len(region) < cutoff:
                    finished = AtomSet()
                    _rda_region(graph, alpha, region, finished)
                    candidates.extend(finished.discovery_order)

            if len(large) > 1:
                if pool is None:
                    pool = _make_pool(graph, alpha, workers, use_processes)
                task = _expand_in_worker if use_processes else partial(_expand_region, graph, alpha)
                results = pool.map(task, large)
            else:
                results = [_expand_region(graph, alpha, region) for region in large]

            pending = []
            for hull, children in results:
                candidates.append(VertexSet(hull))
                pending.extend(children)
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    atoms = AtomSet.from_candidates(candidates)
    logger.debug("prda merged %d candidate hulls from %d waves", len(candidates), waves)
    return _finish(graph, atoms, "prda", tie_break, ordering, separators, start)


def decompose_graph(graph: Graph, algorithm: str = DEFAULT_ALGORITHM,
                    tie_break: Optional[TieBreak] = None, separators: bool = True,
                    workers: Optional[int] = PRDA_MAX_WORKERS,
                    cutoff: int = PRDA_PARALLEL_CUTOFF) -> Decomposition:
    """
    Decompose any graph into atoms, one connected component at a time.

    Each component with two or more vertices gets its own MCS ordering and
    runs through the chosen algorithm; isolated vertices become singleton
    atoms.

    Args:
        graph: Graph to decompose
        algorithm: One of ALGORITHMS
        tie_break: MCS tie-break rule (default: lowest id)
        separators: Whether to extract clique minimal separators
        workers: Pool size for prda
        cutoff: Parallel cutoff for prda

    Returns:
        Decomposition in the ids of the given graph

    Raises:
        EmptyGraphError: If the graph has no vertices
        ValueError: If the algorithm name is unknown
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"Unknown algorithm {algorithm!r}; choose one of {', '.join(ALGORITHMS)}")
    graph.require_vertices()
    tie_break = tie_break or TieBreak.lowest_id()
    if algorithm == "baseline" and tie_break.kind != TieBreak.LOWEST_ID:
        logger.warning("baseline always numbers by lowest id; ignoring tie-break %s", tie_break)
        tie_break = TieBreak.lowest_id()
    start = time.perf_counter()

    components = graph.connected_components()
    atoms = AtomSet()
    ordering = None
    for component in components:
        if len(component) == 1:
            atoms.add(component)
            continue
        sub = graph if len(components) == 1 else graph.induced(component)
        if algorithm == "baseline":
            result = leimer_decompose(sub)
        else:
            sub_ordering = mcs_ordering(sub, _tie_break_for(tie_break, sub, graph))
            run = rda if algorithm == "rda" else partial(prda, workers=workers, cutoff=cutoff)
            result = run(sub, sub_ordering)
            if len(components) == 1:
                ordering = sub_ordering
        for atom in result.atoms:
            atoms.add(sub.lift(atom))

    found = clique_minimal_separators(graph, atoms) if separators else None
    wall_time = time.perf_counter() - start
    logger.info("%s found %d atoms in %d components (%.4fs)",
                algorithm, len(atoms), len(components), wall_time)
    return Decomposition(atoms, algorithm, str(tie_break), wall_time, found, ordering)


def _tie_break_for(tie_break: TieBreak, sub: Graph, parent: Graph) -> TieBreak:
    """Restrict a preference order to the vertices of an induced component."""
    if tie_break.kind != TieBreak.PREFERENCE or sub is parent:
        return tie_break
    local = {parent_id: i for i, parent_id in enumerate(sub.origin)}
    return TieBreak.preference([local[v] for v in tie_break.order if v in local])


def _check_inputs(graph: Graph, ordering: Ordering) -> None:
    graph.require_vertices()
    if not graph.is_connected():
        raise DisconnectedGraphError(
            f"Graph with {graph.n} vertices is not connected; use decompose_graph for disconnected input")
    if not is_valid_mcs_ordering(graph, ordering):
        raise InvalidOrderingError("The ordering does not follow the MCS selection rule on this graph")


def _rda_region(graph: Graph, alpha: Sequence[int], region, atoms: AtomSet) -> None:
    """
    Run the sequential loop on the subgraph induced by region.

    The alive set only shrinks, so a single pointer over the region sorted
    by alpha yields the next first vertex.
    """
    adjacency = graph.adjacency
    alive: Set[int] = set(region)
    queue = sorted(alive, key=alpha.__getitem__)
    cursor = 0
    iterations = 0

    while alive:
        while queue[cursor] not in alive:
            cursor += 1
        v = queue[cursor]
        seed = {w for w in adjacency[v] if w in alive}
        seed.add(v)
        hull = expand_hull(graph, alive, seed)
        # V <- N[V \ H]: drop hull vertices with no alive neighbor outside H.
        retired = [h for h in hull if all(w in hull or w not in alive for w in adjacency[h])]
        alive.difference_update(retired)
        atoms.add(hull)
        iterations += 1

    logger.debug("Sequential pass over %d vertices took %d iterations", len(queue), iterations)


def _expand_region(graph: Graph, alpha: Sequence[int],
                   region: Region) -> Tuple[Region, List[Region]]:
    """First hull of a region plus the closed neighborhoods of the components outside it."""
    adjacency = graph.adjacency
    u = min(region, key=alpha.__getitem__)
    seed = {w for w in adjacency[u] if w in region}
    seed.add(u)
    hull = expand_hull(graph, region, seed)

    children: List[Region] = []
    rest = set(region) - hull
    while rest:
        piece = collect_component(adjacency, min(rest), rest.__contains__)
        rest -= piece
        closed = set(piece)
        for x in piece:
            closed.update(w for w in adjacency[x] if w in region)
        children.append(frozenset(closed))
    return frozenset(hull), children


_worker_graph: Optional[Graph] = None
_worker_alpha: Optional[Sequence[int]] = None


def _init_worker(graph: Graph, alpha: Sequence[int]) -> None:
    global _worker_graph, _worker_alpha
    _worker_graph = graph
    _worker_alpha = alpha


def _expand_in_worker(region: Region) -> Tuple[Region, List[Region]]:
    return _expand_region(_worker_graph, _worker_alpha, region)


def _make_pool(graph: Graph, alpha: Sequence[int], workers: Optional[int], use_processes: bool):
    if use_processes:
        logger.debug("Starting process pool (workers=%s)", workers or "cpu count")
        return multiprocessing.Pool(processes=workers, initializer=_init_worker,
                                    initargs=(graph, alpha))
    logger.debug("Starting thread pool (workers=%s)", workers or "cpu count")
    return ThreadPool(processes=workers)


def _finish(graph: Graph, atoms: AtomSet, algorithm: str, tie_break: Optional[TieBreak],
            ordering: Ordering, separators: bool, start: float) -> Decomposition:
    found = clique_minimal_separators(graph, atoms) if separators else None
    wall_time = time.perf_counter() - start
    logger.info("%s found %d atoms on %d vertices (%.4fs)", algorithm, len(atoms), graph.n, wall_time)
    label = str(tie_break) if tie_break is not None else GIVEN_ORDERING
    return Decomposition(atoms, algorithm, label, wall_time, found, ordering)
