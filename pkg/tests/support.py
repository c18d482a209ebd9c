"""
Shared helpers for the test suites: fixture loading, seeded graph
families and hypothesis strategies.
"""

import os
import sys
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, Set, Tuple

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import hypothesis.strategies as st

from models import Graph
from utils.generators import seeded_gnp
from utils.input_handler import load_edge_list, load_edge_list_file

FIXTURES = Path(__file__).parent / "fixtures"

WORKED_EXAMPLE_ATOMS = {
    frozenset("xr"), frozenset("drb"), frozenset("brsl"), frozenset("rtl"), frozenset("at"),
}
WORKED_EXAMPLE_SEPARATORS = {frozenset("r"), frozenset("t"), frozenset("rb"), frozenset("rl")}
SQUARE_ATOMS = {frozenset("bcef"), frozenset("ab"), frozenset("cd")}

ORACLE_PROBABILITIES = (0.2, 0.35, 0.5)


def load_fixture(name: str) -> Graph:
    return load_edge_list_file(FIXTURES / name)


def graph_from_text(text: str) -> Graph:
    return load_edge_list(text.splitlines())


def label_sets(graph: Graph, sets: Iterable[Iterable[int]]) -> Set[FrozenSet[str]]:
    """Vertex-id sets as a set of label frozensets."""
    return {frozenset(graph.label(v) for v in s) for s in sets}


def id_sets(sets: Iterable[Iterable[int]]) -> Set[FrozenSet[int]]:
    return {frozenset(s) for s in sets}


def sequence_of(graph: Graph, labels: str):
    """Ids for a string of single-character labels, in order."""
    return [graph.id_of(label) for label in labels]


def connected_random_graphs(count: int, min_n: int, max_n: int,
                            probabilities=ORACLE_PROBABILITIES,
                            first_seed: int = 0) -> Iterator[Tuple[int, Graph]]:
    """
    Yield (seed, graph) for the first `count` connected G(n, p) graphs.

    n cycles through min_n..max_n and p through the probabilities as the
    seed grows, so every size and density is represented.
    """
    sizes = max_n - min_n + 1
    found = 0
    seed = first_seed
    while found < count:
        n = min_n + seed % sizes
        p = probabilities[(seed // sizes) % len(probabilities)]
        graph = seeded_gnp(n, p, seed)
        seed += 1
        if graph.is_connected():
            found += 1
            yield seed - 1, graph


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    """A random spanning tree plus a random set of extra edges."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=v - 1))
        edges.add((parent, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges |= draw(st.sets(st.sampled_from(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, edges)


@st.composite
def any_graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Graph.from_edges(n, edges)
