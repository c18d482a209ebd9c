"""
Seeded graph generators and networkx conversion.

Used to build the random suites of the tests and the sparse graphs of
the scaling and trend checks.
"""

import random
from pathlib import Path
from typing import Union

import networkx as nx

from models import Graph


def to_networkx(graph: Graph) -> nx.Graph:
    """Copy the graph into a networkx Graph over the same integer ids."""
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(reference: nx.Graph) -> Graph:
    """
    Build a Graph from a networkx graph.

    Nodes are numbered in sorted order when they are sortable; labels are
    the node names as text.
    """
    try:
        nodes = sorted(reference.nodes())
    except TypeError:
        nodes = list(reference.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    edges = ((index[u], index[v]) for u, v in reference.edges())
    return Graph.from_edges(len(nodes), edges, [str(node) for node in nodes])


def seeded_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) graph, reproducible from the seed."""
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_graph_with_trees(n: int, average_degree: float, seed: int) -> Graph:
    """
    Connected sparse graph: a random core on half the vertices with trees
    hanging off it.

    The core is a G(n, m) graph whose components are chained together;
    every other vertex attaches to a random earlier vertex. Edge count
    grows linearly in n for a fixed average degree.

    Raises:
        ValueError: If n is smaller than 2 or the degree is negative
    """
    if n < 2:
        raise ValueError(f"Need at least 2 vertices, got {n}")
    if average_degree < 0:
        raise ValueError(f"Average degree must not be negative, got {average_degree}")
    rng = random.Random(seed)
    core_size = max(2, n // 2)
    core_edges = int(core_size * average_degree / 2)
    reference = nx.gnm_random_graph(core_size, core_edges, seed=seed)

    anchors = sorted(min(component) for component in nx.connected_components(reference))
    for left, right in zip(anchors, anchors[1:]):
        reference.add_edge(left, right)
    for v in range(core_size, n):
        reference.add_edge(v, rng.randrange(v))
    return from_networkx(reference)


def write_edge_list(graph: Graph, path: Union[str, Path]) -> None:
    """
    Write the graph as a label edge list, one edge per line.

    Isolated vertices have no line to live on and are dropped.
    """
    lines = [f"# {graph.n} vertices, {graph.m} edges"]
    lines.extend(f"{graph.label(u)} {graph.label(v)}" for u, v in graph.edges())
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
