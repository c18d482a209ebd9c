"""
Ordering models for Maximum Cardinality Search.

This module defines the vertex ordering alpha (a bijection onto 1..n),
the tie-break rules used when several unnumbered vertices share the
maximum weight, and the optional per-step weight trace.
"""

import random
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import DEFAULT_TIE_BREAK, RANDOM_TIE_BREAK_PREFIX
from errors import InvalidOrderingError, InvalidVertexError


class TieBreak:
    """
    Rule for choosing among unnumbered vertices of equal maximum weight.

    Each rule ranks the vertices; the lowest rank wins a tie.
    - lowest-id: rank = vertex id
    - random(seed): ranks form a seeded random permutation
    - preference(order): explicit ranking, first vertex preferred
    """

    LOWEST_ID = "lowest-id"
    RANDOM = "random"
    PREFERENCE = "preference"

    def __init__(self, kind: str = LOWEST_ID, seed: Optional[int] = None,
                 order: Optional[Sequence[int]] = None):
        if kind not in (self.LOWEST_ID, self.RANDOM, self.PREFERENCE):
            raise ValueError(f"Unknown tie-break rule: {kind!r}")
        if kind == self.RANDOM and seed is None:
            raise ValueError("The random tie-break needs a seed")
        if kind == self.PREFERENCE and order is None:
            raise ValueError("The preference tie-break needs a vertex order")
        self.kind = kind
        self.seed = seed
        self.order = tuple(order) if order is not None else None

    @classmethod
    def lowest_id(cls) -> "TieBreak":
        return cls(cls.LOWEST_ID)

    @classmethod
    def random(cls, seed: int) -> "TieBreak":
        return cls(cls.RANDOM, seed=seed)

    @classmethod
    def preference(cls, order: Sequence[int]) -> "TieBreak":
        return cls(cls.PREFERENCE, order=order)

    @classmethod
    def parse(cls, text: Optional[str]) -> "TieBreak":
        """
        Parse the command-line forms 'lowest-id' and 'random:<seed>'.

        Raises:
            ValueError: If the text is neither form
        """
        if text is None or text == DEFAULT_TIE_BREAK:
            return cls.lowest_id()
        if text.startswith(RANDOM_TIE_BREAK_PREFIX):
            seed_text = text[len(RANDOM_TIE_BREAK_PREFIX):]
            try:
                return cls.random(int(seed_text))
            except ValueError:
                raise ValueError(f"Invalid random tie-break seed: {seed_text!r}") from None
        raise ValueError(f"Unknown tie-break {text!r}; use 'lowest-id' or 'random:<seed>'")

    def ranks(self, n: int) -> List[int]:
        """
        Return the rank of every vertex 0..n-1 (lower rank wins ties).

        Raises:
            InvalidOrderingError: If a preference order does not cover 0..n-1
        """
        if self.kind == self.LOWEST_ID:
            return list(range(n))
        if self.kind == self.RANDOM:
            permutation = list(range(n))
            random.Random(self.seed).shuffle(permutation)
            return permutation
        if sorted(self.order) != list(range(n)):
            raise InvalidOrderingError("A preference tie-break must list every vertex exactly once")
        ranks = [0] * n
        for rank, v in enumerate(self.order):
            ranks[v] = rank
        return ranks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TieBreak):
            return False
        return (self.kind, self.seed, self.order) == (other.kind, other.seed, other.order)

    def __hash__(self) -> int:
        return hash((self.kind, self.seed, self.order))

    def __str__(self) -> str:
        if self.kind == self.RANDOM:
            return f"{RANDOM_TIE_BREAK_PREFIX}{self.seed}"
        return self.kind

    def __repr__(self) -> str:
        return f"TieBreak({str(self)!r})"


@dataclass(frozen=True)
class TraceStep:
    """
    One numbering step of MCS.

    weights_before and weights_after hold w(.) for every vertex at the
    instants v- and v+ around the numbering of `vertex`.
    """
    vertex: int
    position: int
    weights_before: Tuple[int, ...]
    weights_after: Tuple[int, ...]


class McsTrace:
    """
    Recorded weight snapshots of an MCS run, in numbering order (n down to 1).
    """

    def __init__(self, steps: Sequence[TraceStep]):
        self.steps: Tuple[TraceStep, ...] = tuple(steps)
        self._by_vertex: Dict[int, TraceStep] = {step.vertex: step for step in self.steps}

    def step_for(self, vertex: int) -> TraceStep:
        try:
            return self._by_vertex[vertex]
        except KeyError:
            raise InvalidVertexError(f"Vertex {vertex} does not appear in the trace") from None

    def numbering_weights(self) -> Dict[int, int]:
        """Weight of each vertex at the moment it received its number."""
        return {step.vertex: step.weights_before[step.vertex] for step in self.steps}

    def __len__(self) -> int:
        return len(self.steps)


class Ordering:
    """
    Vertex ordering alpha: a bijection from vertex ids onto positions 1..n.
    """

    def __init__(self, alpha: Sequence[int], trace: Optional[McsTrace] = None):
        """
        Initialize an ordering from per-vertex positions.

        Args:
            alpha: alpha[v] is the position (1..n) of vertex v
            trace: Optional MCS weight trace that produced this ordering

        Raises:
            InvalidOrderingError: If alpha is not a bijection onto 1..n
        """
        n = len(alpha)
        inverse = [-1] * n
        for v, position in enumerate(alpha):
            if not 1 <= position <= n or inverse[position - 1] != -1:
                raise InvalidOrderingError(f"Ordering is not a bijection onto 1..{n} (vertex {v} -> {position})")
            inverse[position - 1] = v
        self._alpha: Tuple[int, ...] = tuple(alpha)
        self._inverse: Tuple[int, ...] = tuple(inverse)
        self.trace = trace

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> "Ordering":
        """
        Build alpha from the sequence v1..vn, so that alpha(vi) = i.

        Raises:
            InvalidOrderingError: If the sequence is not a permutation of 0..n-1
        """
        n = len(vertices)
        alpha = [0] * n
        for position, v in enumerate(vertices, start=1):
            if not 0 <= v < n or alpha[v]:
                raise InvalidOrderingError(f"Sequence is not a permutation of 0..{n - 1}")
            alpha[v] = position
        return cls(alpha)

    @property
    def n(self) -> int:
        return len(self._alpha)

    @property
    def alpha(self) -> Tuple[int, ...]:
        """Positions indexed by vertex id."""
        return self._alpha

    @property
    def inverse(self) -> Tuple[int, ...]:
        """Vertex ids indexed by position - 1."""
        return self._inverse

    def position(self, v: int) -> int:
        return self._alpha[v]

    def vertex_at(self, position: int) -> int:
        return self._inverse[position - 1]

    def first_in(self, vertices: Iterable[int]) -> int:
        """Return the member of the set with the smallest position."""
        return min(vertices, key=self._alpha.__getitem__)

    def sequence(self) -> Tuple[int, ...]:
        """Vertices in increasing position order."""
        return self._inverse

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ordering):
            return False
        return self._alpha == other._alpha

    def __hash__(self) -> int:
        return hash(self._alpha)

    def __repr__(self) -> str:
        return f"Ordering({list(self._inverse)})"
