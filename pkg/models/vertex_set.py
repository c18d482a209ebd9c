"""
VertexSet model: the canonical sorted set of vertex ids.

Atoms, hulls, separators and components are all VertexSets. The sorted
tuple gives a canonical form for equality and ordering, the frozenset
gives constant-time membership.
"""

from typing import FrozenSet, Iterable, Iterator, Tuple, Union


class VertexSet:
    """
    Immutable, duplicate-free, sorted collection of vertex ids.
    """

    __slots__ = ("_members", "_lookup")

    def __init__(self, members: Iterable[int] = ()):
        lookup = frozenset(members)
        self._lookup: FrozenSet[int] = lookup
        self._members: Tuple[int, ...] = tuple(sorted(lookup))

    @property
    def members(self) -> Tuple[int, ...]:
        """Sorted member ids."""
        return self._members

    @property
    def lookup(self) -> FrozenSet[int]:
        """Members as a frozenset, for set algebra with plain Python sets."""
        return self._lookup

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """Canonical ordering key: by size, then lexicographic."""
        return len(self._members), self._members

    def issubset(self, other: Union["VertexSet", Iterable[int]]) -> bool:
        """Return True if every member also belongs to other."""
        return self._lookup.issubset(_as_lookup(other))

    def issuperset(self, other: Union["VertexSet", Iterable[int]]) -> bool:
        """Return True if every member of other belongs to this set."""
        return self._lookup.issuperset(_as_lookup(other))

    def union(self, other: Union["VertexSet", Iterable[int]]) -> "VertexSet":
        return VertexSet(self._lookup | _as_lookup(other))

    def intersection(self, other: Union["VertexSet", Iterable[int]]) -> "VertexSet":
        return VertexSet(self._lookup & _as_lookup(other))

    def difference(self, other: Union["VertexSet", Iterable[int]]) -> "VertexSet":
        return VertexSet(self._lookup - _as_lookup(other))

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[int]:
        return iter(self._members)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._lookup

    def __bool__(self) -> bool:
        return bool(self._members)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexSet):
            return self._members == other._members
        if isinstance(other, (set, frozenset)):
            return self._lookup == other
        return NotImplemented

    def __lt__(self, other: "VertexSet") -> bool:
        return self.sort_key < other.sort_key

    def __hash__(self) -> int:
        return hash(self._lookup)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self._members) + "}"

    def __repr__(self) -> str:
        return f"VertexSet({list(self._members)})"


def _as_lookup(other: Union[VertexSet, Iterable[int]]) -> FrozenSet[int]:
    if isinstance(other, VertexSet):
        return other.lookup
    if isinstance(other, frozenset):
        return other
    return frozenset(other)
