"""
Models package for Atom Decomposer application.

This package contains the core data models: vertex sets, graphs,
orderings and decomposition results.
"""

from .vertex_set import VertexSet
from .graph import Graph, LoadReport
from .ordering import McsTrace, Ordering, TieBreak, TraceStep
from .decomposition import AtomSet, Decomposition, Triangulation

__all__ = [
    'VertexSet', 'Graph', 'LoadReport',
    'McsTrace', 'Ordering', 'TieBreak', 'TraceStep',
    'AtomSet', 'Decomposition', 'Triangulation',
]
__version__ = "2.0.0"
