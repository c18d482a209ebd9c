"""
Visualization utilities for the Atom Decomposer application.

This module draws a graph with its atoms highlighted using matplotlib
and a networkx spring layout.
"""

import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib
from matplotlib.colors import to_hex

from models import Decomposition, Graph
from utils.generators import to_networkx

logger = logging.getLogger(__name__)

BACKGROUND = '#1e3a5f'  # Dark blue
EDGE_COLOR = 'lightgrey'
SEPARATOR_COLOR = 'orange'
MAX_LABELLED_VERTICES = 200


def draw_decomposition(graph: Graph, decomposition: Decomposition,
                       path: Optional[Union[str, Path]] = None, show: bool = False,
                       seed: int = 0) -> None:
    """
    Draw the graph with one shaded hull per atom.

    Features:
    - Dark blue background
    - Each atom outlined in its own color
    - Separator vertices drawn in orange
    - Vertex labels for graphs up to MAX_LABELLED_VERTICES vertices

    Args:
        graph: The decomposed graph
        decomposition: Its decomposition
        path: Image file to save to (format from the suffix)
        show: Whether to open an interactive window
        seed: Layout seed, for reproducible pictures
    """
    if not show:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import networkx as nx

    reference = to_networkx(graph)
    positions = nx.spring_layout(reference, seed=seed)
    separator_vertices = set()
    for separator in decomposition.separators or []:
        separator_vertices.update(separator)

    fig, ax = plt.subplots(1, 1, figsize=(12, 10))
    fig.patch.set_facecolor(BACKGROUND)
    ax.set_facecolor(BACKGROUND)

    palette = plt.get_cmap("tab20")
    for index, atom in enumerate(decomposition.atoms):
        color = to_hex(palette(index % palette.N))
        nx.draw_networkx_edges(reference.subgraph(atom), positions, ax=ax,
                               edge_color=color, width=3, alpha=0.6)

    nx.draw_networkx_edges(reference, positions, ax=ax, edge_color=EDGE_COLOR, width=0.8, alpha=0.5)
    node_colors = [SEPARATOR_COLOR if v in separator_vertices else EDGE_COLOR for v in reference]
    nx.draw_networkx_nodes(reference, positions, ax=ax, node_color=node_colors,
                           node_size=120 if graph.n <= MAX_LABELLED_VERTICES else 10)
    if graph.n <= MAX_LABELLED_VERTICES:
        nx.draw_networkx_labels(reference, positions, ax=ax,
                                labels={v: graph.label(v) for v in reference}, font_size=9)

    ax.set_title(f'Atoms ({len(decomposition.atoms)}) by {decomposition.algorithm}',
                 fontsize=16, fontweight='bold', color='white', pad=20)
    ax.set_axis_off()
    plt.tight_layout()

    if path is not None:
        fig.savefig(path, facecolor=fig.get_facecolor())
        logger.info("Saved decomposition drawing to %s", path)
    if show:
        plt.show()
    plt.close(fig)
