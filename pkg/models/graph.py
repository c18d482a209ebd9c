"""
Graph model for representing simple undirected graphs.

This module defines the immutable Graph class: dense integer vertex ids
with an external label table, sorted neighbor lists, and the
neighborhood / component / completeness primitives used by every
decomposition algorithm.
"""

from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import EmptyGraphError, InvalidVertexError
from .vertex_set import VertexSet


class LoadReport:
    """
    Counts of the normalizations applied while building a graph.
    """

    def __init__(self, self_loops: int = 0, duplicate_edges: int = 0):
        self.self_loops = self_loops
        self.duplicate_edges = duplicate_edges

    @property
    def clean(self) -> bool:
        """True when the input needed no normalization."""
        return self.self_loops == 0 and self.duplicate_edges == 0

    def __repr__(self) -> str:
        return f"LoadReport(self_loops={self.self_loops}, duplicate_edges={self.duplicate_edges})"


class Graph:
    """
    Immutable simple undirected graph over vertex ids 0..n-1.

    Neighbor lists are sorted ascending and symmetric. Each vertex carries
    an external label; graphs produced by induced() also remember the id
    each vertex had in the parent graph so results can be lifted back.
    """

    __slots__ = ("_adjacency", "_neighbor_sets", "_labels", "_label_index", "_origin", "_m")

    def __init__(self, adjacency: Sequence[Iterable[int]], labels: Optional[Sequence[str]] = None,
                 origin: Optional[Sequence[int]] = None):
        """
        Build a graph from per-vertex neighbor collections.

        Args:
            adjacency: For each vertex id, the ids of its neighbors
            labels: External name per vertex (defaults to the id as text)
            origin: Parent-graph id per vertex, for induced subgraphs

        Raises:
            InvalidVertexError: If a neighbor id is out of range
            ValueError: If the adjacency has self-loops or is not symmetric
        """
        n = len(adjacency)
        neighbor_sets = tuple(frozenset(neighbors) for neighbors in adjacency)
        edge_ends = 0
        for v, neighbors in enumerate(neighbor_sets):
            for w in neighbors:
                if not 0 <= w < n:
                    raise InvalidVertexError(f"Neighbor id {w} of vertex {v} is out of range 0..{n - 1}")
                if w == v:
                    raise ValueError(f"Self-loop at vertex {v}; graphs must be simple")
                if v not in neighbor_sets[w]:
                    raise ValueError(f"Adjacency is not symmetric: {v}->{w} has no reverse edge")
            edge_ends += len(neighbors)

        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise ValueError(f"Expected {n} labels, got {len(labels)}")
        if origin is not None and len(origin) != n:
            raise ValueError(f"Expected {n} origin ids, got {len(origin)}")

        self._adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in neighbor_sets)
        self._neighbor_sets: Tuple[FrozenSet[int], ...] = neighbor_sets
        self._labels: Tuple[str, ...] = tuple(str(label) for label in labels)
        self._label_index: Dict[str, int] = {label: v for v, label in enumerate(self._labels)}
        if len(self._label_index) != n:
            raise ValueError("Vertex labels must be unique")
        self._origin: Optional[Tuple[int, ...]] = tuple(origin) if origin is not None else None
        self._m = edge_ends // 2

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Sequence[str]] = None) -> "Graph":
        """
        Build a graph on ids 0..n-1 from an edge iterable.

        Self-loops are dropped and duplicate edges merged.
        """
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u != v:
                adjacency[u].add(v)
                adjacency[v].add(u)
        return cls(adjacency, labels)

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[Tuple[str, str]]) -> Tuple["Graph", LoadReport]:
        """
        Build a graph from label pairs, assigning ids in first-appearance order.

        Args:
            pairs: Iterable of (label, label) edges

        Returns:
            Tuple of the graph and a LoadReport of the normalizations applied
        """
        index: Dict[str, int] = {}
        labels: List[str] = []
        adjacency: List[set] = []
        report = LoadReport()

        def vertex_for(label: str) -> int:
            if label not in index:
                index[label] = len(labels)
                labels.append(label)
                adjacency.append(set())
            return index[label]

        for left, right in pairs:
            u = vertex_for(left)
            v = vertex_for(right)
            if u == v:
                report.self_loops += 1
            elif v in adjacency[u]:
                report.duplicate_edges += 1
            else:
                adjacency[u].add(v)
                adjacency[v].add(u)

        return cls(adjacency, labels), report

    @property
    def n(self) -> int:
        """Vertex count."""
        return len(self._adjacency)

    @property
    def m(self) -> int:
        """Edge count."""
        return self._m

    @property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted neighbor tuples indexed by vertex id."""
        return self._adjacency

    @property
    def neighbor_sets(self) -> Tuple[FrozenSet[int], ...]:
        """Neighbor frozensets indexed by vertex id, for adjacency tests."""
        return self._neighbor_sets

    @property
    def labels(self) -> Tuple[str, ...]:
        return self._labels

    @property
    def origin(self) -> Optional[Tuple[int, ...]]:
        """Parent-graph ids, or None for a graph that was not induced."""
        return self._origin

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(range(self.n))

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self._adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v."""
        for u, neighbors in enumerate(self._adjacency):
            for v in neighbors:
                if u < v:
                    yield u, v

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self._labels[v]

    def id_of(self, label: str) -> int:
        """
        Return the vertex id carrying the given label.

        Raises:
            InvalidVertexError: If no vertex has this label
        """
        try:
            return self._label_index[str(label)]
        except KeyError:
            raise InvalidVertexError(f"Unknown vertex label: {label!r}") from None

    def ids_of(self, labels: Iterable[str]) -> VertexSet:
        return VertexSet(self.id_of(label) for label in labels)

    def labels_of(self, vertices: Iterable[int]) -> List[str]:
        """Labels of the given ids, sorted as strings."""
        return sorted(self.label(v) for v in vertices)

    def lift(self, vertices: Iterable[int]) -> VertexSet:
        """
        Map ids of this (induced) graph back to the ids of its parent graph.
        """
        if self._origin is None:
            return VertexSet(vertices)
        return VertexSet(self._origin[v] for v in vertices)

    def neighborhood(self, vertices: Iterable[int], closed: bool = False) -> VertexSet:
        """
        Return N(A), or N[A] = N(A) ∪ A when closed is True.

        Args:
            vertices: The vertex set A
            closed: Whether to include A itself

        Raises:
            InvalidVertexError: If a member of A is out of range
        """
        inside = self._checked_set(vertices)
        result = set()
        for v in inside:
            result.update(self._adjacency[v])
        if closed:
            result |= inside
        else:
            result -= inside
        return VertexSet(result)

    def connected_components(self, vertices: Optional[Iterable[int]] = None) -> List[VertexSet]:
        """
        Partition A into the vertex sets of the connected components of G_A.

        Components are returned ordered by their smallest member.
        """
        allowed = self._checked_set(range(self.n) if vertices is None else vertices)
        adjacency = self._adjacency
        seen = set()
        components = []
        for start in sorted(allowed):
            if start in seen:
                continue
            seen.add(start)
            component = [start]
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in adjacency[v]:
                    if w in allowed and w not in seen:
                        seen.add(w)
                        component.append(w)
                        queue.append(w)
            components.append(VertexSet(component))
        return components

    def is_connected(self) -> bool:
        """True for graphs with exactly one component (False when empty)."""
        return len(self.connected_components()) == 1

    def is_complete(self, vertices: Iterable[int]) -> bool:
        """
        Return True if every pair of vertices in A is adjacent.

        Sets with at most one vertex are complete.
        """
        members = sorted(self._checked_set(vertices))
        neighbor_sets = self._neighbor_sets
        for i, u in enumerate(members):
            adjacent = neighbor_sets[u]
            for v in members[i + 1:]:
                if v not in adjacent:
                    return False
        return True

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """
        Return the induced subgraph G_A.

        Vertices of the new graph are numbered in ascending order of their
        ids here; origin keeps those ids so results can be lifted back.
        """
        members = sorted(self._checked_set(vertices))
        remap = {v: i for i, v in enumerate(members)}
        adjacency = [[remap[w] for w in self._adjacency[v] if w in remap] for v in members]
        labels = [self._labels[v] for v in members]
        return Graph(adjacency, labels, origin=members)

    def check_vertices(self, vertices: Iterable[int]) -> VertexSet:
        """
        Return the ids as a VertexSet after range-checking them.

        Raises:
            InvalidVertexError: If an id is out of range
        """
        return VertexSet(self._checked_set(vertices))

    def require_vertices(self) -> None:
        """
        Raises:
            EmptyGraphError: If the graph has no vertices
        """
        if self.n == 0:
            raise EmptyGraphError("The graph has no vertices")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < len(self._adjacency):
            raise InvalidVertexError(f"Vertex id {v} is out of range 0..{len(self._adjacency) - 1}")

    def _checked_set(self, vertices: Iterable[int]) -> set:
        if isinstance(vertices, range) and vertices == range(self.n):
            return set(vertices)
        members = set(vertices)
        for v in members:
            self._check_vertex(v)
        return members

    def __eq__(self, other: object) -> bool:
        """Graphs are equal when labels and edge sets agree."""
        if not isinstance(other, Graph):
            return False
        return self._labels == other._labels and self._adjacency == other._adjacency

    def __hash__(self) -> int:
        return hash((self._labels, self._adjacency))

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, labels={list(self._labels[:8])}{'...' if self.n > 8 else ''})"
