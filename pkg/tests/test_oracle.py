"""
Unit tests for the exhaustive reference implementations.
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from algorithms.hull import is_convex
from algorithms.oracle import (
    OracleBudget, brute_atoms, brute_clique_min_seps, brute_hull, brute_is_convex_by_paths
)
from errors import DisconnectedGraphError, EmptyGraphError, OracleBudgetExceeded
from models import Graph
from utils.generators import seeded_gnp
from tests.support import (
    SQUARE_ATOMS, WORKED_EXAMPLE_ATOMS, WORKED_EXAMPLE_SEPARATORS, connected_random_graphs,
    graph_from_text, id_sets, label_sets, load_fixture
)


class TestBruteSeparators(unittest.TestCase):
    """Test exhaustive clique minimal separator search."""

    def test_path(self):
        """Test a-b-c has the separator {b}."""
        graph = graph_from_text("a b\nb c")
        self.assertEqual(label_sets(graph, brute_clique_min_seps(graph)), {frozenset("b")})

    def test_worked_example(self):
        """Test the four separators of the worked example."""
        graph = load_fixture("worked_example.txt")
        self.assertEqual(label_sets(graph, brute_clique_min_seps(graph)), WORKED_EXAMPLE_SEPARATORS)

    def test_complete_graph(self):
        """Test K4 has none."""
        graph = graph_from_text("a b\na c\na d\nb c\nb d\nc d")
        self.assertEqual(brute_clique_min_seps(graph), [])

    def test_budget(self):
        """Test graphs over budget are refused."""
        with self.assertRaises(OracleBudgetExceeded):
            brute_clique_min_seps(seeded_gnp(13, 0.3, seed=1))
        with self.assertRaises(OracleBudgetExceeded):
            brute_clique_min_seps(load_fixture("worked_example.txt"), OracleBudget(max_vertices=5))
        with self.assertRaises(OracleBudgetExceeded):
            brute_clique_min_seps(load_fixture("worked_example.txt"), OracleBudget(max_subsets=100))


class TestBruteAtoms(unittest.TestCase):
    """Test exhaustive atom splitting."""

    def test_worked_example(self):
        """Test the five atoms of the worked example."""
        graph = load_fixture("worked_example.txt")
        self.assertEqual(label_sets(graph, brute_atoms(graph)), WORKED_EXAMPLE_ATOMS)

    def test_square_with_pendants(self):
        """Test the three atoms of the square with pendants."""
        graph = load_fixture("square_with_pendants.txt")
        self.assertEqual(label_sets(graph, brute_atoms(graph)), SQUARE_ATOMS)

    def test_four_cycle(self):
        """Test a 4-cycle is one atom."""
        graph = graph_from_text("a b\nb c\nc d\nd a")
        self.assertEqual(id_sets(brute_atoms(graph)), {frozenset(range(4))})

    def test_independent_of_first_separator(self):
        """Test every top-level separator choice gives the same atoms."""
        graphs = [load_fixture("worked_example.txt")]
        graphs.extend(graph for _, graph in connected_random_graphs(30, 5, 9, first_seed=7_000))
        for index, graph in enumerate(graphs):
            expected = id_sets(brute_atoms(graph))
            for choice in range(len(brute_clique_min_seps(graph))):
                with self.subTest(graph=index, choice=choice):
                    self.assertEqual(id_sets(brute_atoms(graph, first_choice=choice)), expected)

    def test_choice_out_of_range(self):
        """Test a separator index past the end raises."""
        graph = graph_from_text("a b\nb c")
        with self.assertRaises(ValueError):
            brute_atoms(graph, first_choice=5)

    def test_atoms_are_prime(self):
        """Test no atom holds a separator of its own."""
        for seed, graph in connected_random_graphs(60, 4, 10, first_seed=3_000):
            for atom in brute_atoms(graph):
                with self.subTest(seed=seed, atom=atom.members):
                    self.assertEqual(brute_clique_min_seps(graph.induced(atom)), [])

    def test_preconditions(self):
        """Test empty and disconnected input raise."""
        with self.assertRaises(EmptyGraphError):
            brute_atoms(Graph([]))
        with self.assertRaises(DisconnectedGraphError):
            brute_atoms(graph_from_text("a b\nc d"))


class TestBruteHull(unittest.TestCase):
    """Test hull enumeration."""

    def test_whole_vertex_set(self):
        """Test R = V gives V."""
        graph = load_fixture("worked_example.txt")
        self.assertEqual(brute_hull(graph, range(graph.n)), graph.vertices)

    def test_cycle_opposite_vertices(self):
        """Test two opposite vertices of a 4-cycle give the whole cycle."""
        cycle = graph_from_text("a b\nb c\nc d\nd a")
        self.assertEqual(brute_hull(cycle, cycle.ids_of("ac")), cycle.ids_of("abcd"))

    def test_worked_example(self):
        """Test the hull of {b, r, s} is {b, r, s, l}."""
        graph = load_fixture("worked_example.txt")
        self.assertEqual(brute_hull(graph, graph.ids_of("brs")), graph.ids_of("brsl"))

    def test_result_is_convex_fixed_point(self):
        """Test the hull is convex and is its own hull."""
        for seed, graph in connected_random_graphs(20, 4, 8, first_seed=9_000):
            hull = brute_hull(graph, [0, graph.n - 1])
            with self.subTest(seed=seed):
                self.assertTrue(is_convex(graph, hull))
                self.assertEqual(brute_hull(graph, hull), hull)

    def test_empty_seed_and_budget(self):
        """Test an empty seed and an oversized graph raise."""
        graph = load_fixture("worked_example.txt")
        with self.assertRaises(EmptyGraphError):
            brute_hull(graph, [])
        with self.assertRaises(OracleBudgetExceeded):
            brute_hull(seeded_gnp(12, 0.3, seed=4), [0])


class TestConvexByPaths(unittest.TestCase):
    """Test the path definition of convexity."""

    def test_worked_example_sets(self):
        """Test {b, r, s, l} is convex and {b, r, s} is not."""
        graph = load_fixture("worked_example.txt")
        self.assertTrue(brute_is_convex_by_paths(graph, graph.ids_of("brsl")))
        self.assertFalse(brute_is_convex_by_paths(graph, graph.ids_of("brs")))


if __name__ == '__main__':
    unittest.main()
