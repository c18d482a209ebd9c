"""
Decomposition result models.

AtomSet is the deduplicated collection of atoms with a vertex -> atoms
membership index; Decomposition is the result record returned by every
decomposition algorithm; Triangulation is the baseline's chordal fill.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple

from .graph import Graph
from .ordering import Ordering
from .vertex_set import VertexSet


class AtomSet:
    """
    Antichain of vertex sets with a vertex -> atom membership index.

    A candidate is only added when no stored atom contains it (equal sets
    count as contained), which is the containment filter of the
    recursive decomposition.
    """

    def __init__(self, atoms: Iterable[Iterable[int]] = ()):
        self._atoms: List[VertexSet] = []
        self._index: Dict[int, List[int]] = {}
        self._canonical: Optional[List[VertexSet]] = None
        for atom in atoms:
            self.add(atom)

    @classmethod
    def from_candidates(cls, candidates: Iterable[Iterable[int]]) -> "AtomSet":
        """
        Keep only the inclusion-maximal candidates.

        Candidates are inserted largest first, so a set is never stored
        before one of its supersets.
        """
        ordered = sorted((VertexSet(c) for c in candidates), key=lambda s: (-len(s), s.members))
        return cls(ordered)

    def contains_superset_of(self, candidate: Iterable[int]) -> bool:
        """
        Return True if some stored atom contains the candidate.

        Only the atoms containing the candidate member that belongs to
        the fewest atoms are inspected.
        """
        members = candidate if isinstance(candidate, VertexSet) else VertexSet(candidate)
        if not members:
            return bool(self._atoms)
        pivot = min(members, key=lambda v: len(self._index.get(v, ())))
        for i in self._index.get(pivot, ()):
            if self._atoms[i].issuperset(members):
                return True
        return False

    def add(self, candidate: Iterable[int]) -> bool:
        """
        Add the candidate unless an existing atom contains it.

        Returns:
            True if the candidate was stored
        """
        atom = candidate if isinstance(candidate, VertexSet) else VertexSet(candidate)
        if self.contains_superset_of(atom):
            return False
        position = len(self._atoms)
        self._atoms.append(atom)
        for v in atom:
            self._index.setdefault(v, []).append(position)
        self._canonical = None
        return True

    @property
    def atoms(self) -> List[VertexSet]:
        """Atoms in canonical order: by size, then lexicographic."""
        if self._canonical is None:
            self._canonical = sorted(self._atoms, key=lambda s: s.sort_key)
        return list(self._canonical)

    @property
    def discovery_order(self) -> List[VertexSet]:
        """Atoms in the order they were added."""
        return list(self._atoms)

    def membership(self, v: int) -> List[int]:
        """Indices (into the canonical list) of the atoms containing v."""
        canonical = self.atoms
        return sorted(i for i, atom in enumerate(canonical) if v in atom)

    def as_frozensets(self) -> Set[frozenset]:
        return {atom.lookup for atom in self._atoms}

    def covered_vertices(self) -> Set[int]:
        return set(self._index)

    def __len__(self) -> int:
        return len(self._atoms)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.atoms)

    def __contains__(self, atom: object) -> bool:
        if not isinstance(atom, VertexSet):
            atom = VertexSet(atom)
        return atom in set(self._atoms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AtomSet):
            return self.atoms == other.atoms
        return NotImplemented

    def __repr__(self) -> str:
        return f"AtomSet({[list(a) for a in self.atoms]})"


@dataclass(frozen=True)
class Decomposition:
    """
    Result of decomposing a graph into atoms.
    """
    atoms: AtomSet
    algorithm: str
    tie_break: str
    wall_time: float = 0.0
    separators: Optional[List[VertexSet]] = None
    ordering: Optional[Ordering] = field(default=None, compare=False)

    def atoms_as_labels(self, graph: Graph) -> List[List[str]]:
        """Atoms as sorted label lists, outer list sorted by (size, labels)."""
        return _canonical_labels(graph, self.atoms)

    def separators_as_labels(self, graph: Graph) -> List[List[str]]:
        return _canonical_labels(graph, self.separators or [])


def _canonical_labels(graph: Graph, sets: Iterable[Iterable[int]]) -> List[List[str]]:
    labelled = [graph.labels_of(s) for s in sets]
    return sorted(labelled, key=lambda labels: (len(labels), labels))


@dataclass(frozen=True)
class Triangulation:
    """
    Minimal triangulation: an elimination ordering plus the fill edges
    that make the graph chordal.

    generators are the vertices whose higher-numbered filled neighbors
    form a minimal separator of the filled graph.
    """
    ordering: Ordering
    fill_edges: Tuple[Tuple[int, int], ...]
    generators: Tuple[int, ...] = ()

    def filled_graph(self, graph: Graph) -> Graph:
        """Return the chordal supergraph G + fill."""
        return Graph.from_edges(graph.n, list(graph.edges()) + list(self.fill_edges), graph.labels)
