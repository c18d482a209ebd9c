"""
Unit tests for Maximum Cardinality Search and orderings.
"""

import itertools
import os
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from hypothesis import given, settings, strategies as st

from algorithms.mcs import AFTER, BEFORE, is_valid_mcs_ordering, mcs_ordering, weight_at
from errors import EmptyGraphError, InvalidOrderingError, InvalidVertexError, TraceError
from models import Graph, Ordering, TieBreak
from tests.support import any_graphs, graph_from_text, load_fixture, sequence_of


class TestTieBreak(unittest.TestCase):
    """Test tie-break rules."""

    def test_parse(self):
        """Test the command-line forms."""
        self.assertEqual(TieBreak.parse("lowest-id"), TieBreak.lowest_id())
        self.assertEqual(TieBreak.parse(None), TieBreak.lowest_id())
        self.assertEqual(TieBreak.parse("random:42"), TieBreak.random(42))
        self.assertEqual(str(TieBreak.random(7)), "random:7")

    def test_parse_rejects_garbage(self):
        """Test unknown forms and bad seeds raise."""
        with self.assertRaises(ValueError):
            TieBreak.parse("highest-id")
        with self.assertRaises(ValueError):
            TieBreak.parse("random:abc")

    def test_random_ranks_are_seeded_permutations(self):
        """Test random ranks are a permutation and repeatable."""
        ranks = TieBreak.random(3).ranks(20)
        self.assertEqual(sorted(ranks), list(range(20)))
        self.assertEqual(ranks, TieBreak.random(3).ranks(20))

    def test_preference_must_cover_vertices(self):
        """Test a preference order missing a vertex is rejected."""
        with self.assertRaises(InvalidOrderingError):
            TieBreak.preference([0, 1]).ranks(3)


class TestOrdering(unittest.TestCase):
    """Test the ordering bijection."""

    def test_from_sequence(self):
        """Test alpha(v_i) = i."""
        ordering = Ordering.from_sequence([2, 0, 1])
        self.assertEqual(ordering.alpha, (2, 3, 1))
        self.assertEqual(ordering.vertex_at(1), 2)
        self.assertEqual(ordering.sequence(), (2, 0, 1))
        self.assertEqual(ordering.first_in([0, 1]), 0)

    def test_not_a_bijection(self):
        """Test repeated or out-of-range positions raise."""
        with self.assertRaises(InvalidOrderingError):
            Ordering([1, 1, 2])
        with self.assertRaises(InvalidOrderingError):
            Ordering([0, 1])
        with self.assertRaises(InvalidOrderingError):
            Ordering.from_sequence([0, 0])


class TestMcsOrdering(unittest.TestCase):
    """Test the MCS ordering and its trace."""

    def setUp(self):
        self.graph = load_fixture("mcs_trace.txt")
        # Preference e, d, c, b, a gives the reference labels and weights.
        self.tie_break = TieBreak.preference(sequence_of(self.graph, "edcba"))

    def test_reference_labels_and_weights(self):
        """Test labels (a..e) -> (1..5) and numbering weights (2,2,1,1,0)."""
        ordering = mcs_ordering(self.graph, self.tie_break, record_trace=True)
        labels = "abcde"
        self.assertEqual([ordering.position(self.graph.id_of(c)) for c in labels], [1, 2, 3, 4, 5])
        weights = ordering.trace.numbering_weights()
        self.assertEqual([weights[self.graph.id_of(c)] for c in labels], [2, 2, 1, 1, 0])

    def test_timestamped_weights(self):
        """Test w at c- and c+ of {a, b} is 1 and 2."""
        ordering = mcs_ordering(self.graph, self.tie_break, record_trace=True)
        c = self.graph.id_of("c")
        ab = self.graph.ids_of("ab")
        self.assertEqual(weight_at(ordering, c, BEFORE, ab), 1)
        self.assertEqual(weight_at(ordering.trace, c, AFTER, ab), 2)

    def test_weight_of_vertex_itself_before_numbering(self):
        """Test u is still unnumbered at u-."""
        ordering = mcs_ordering(self.graph, self.tie_break, record_trace=True)
        e = self.graph.id_of("e")
        self.assertEqual(weight_at(ordering, e, BEFORE, [e]), 0)

    def test_weight_query_errors(self):
        """Test missing trace, bad stamps and fully numbered sets."""
        plain = mcs_ordering(self.graph, self.tie_break)
        c = self.graph.id_of("c")
        with self.assertRaises(TraceError):
            weight_at(plain, c, BEFORE, [c])
        traced = mcs_ordering(self.graph, self.tie_break, record_trace=True)
        with self.assertRaises(TraceError):
            weight_at(traced, c, "*", [c])
        with self.assertRaises(TraceError):
            weight_at(traced, c, AFTER, self.graph.ids_of("de"))
        with self.assertRaises(InvalidVertexError):
            weight_at(traced, 42, BEFORE, [c])

    def test_worked_example_default_ordering(self):
        """Test the lowest-id rule gives (x, d, b, s, r, l, t, a)."""
        graph = load_fixture("worked_example.txt")
        ordering = mcs_ordering(graph)
        self.assertEqual([graph.label(v) for v in ordering.sequence()], list("xdbsrlta"))

    def test_empty_graph(self):
        """Test an empty graph raises."""
        with self.assertRaises(EmptyGraphError):
            mcs_ordering(Graph([]))

    def test_single_vertex(self):
        """Test the one-vertex ordering."""
        ordering = mcs_ordering(Graph([[]]))
        self.assertEqual(ordering.alpha, (1,))


class TestMcsValidity(unittest.TestCase):
    """Test the MCS validity checker."""

    def test_reference_ordering_valid(self):
        """Test the reference labeling is a valid MCS ordering."""
        graph = load_fixture("mcs_trace.txt")
        ordering = Ordering.from_sequence(sequence_of(graph, "abcde"))
        self.assertTrue(is_valid_mcs_ordering(graph, ordering))

    def test_path_numbered_from_middle_leaf_invalid(self):
        """Test an ordering that jumps to a weight-0 vertex is rejected."""
        path = graph_from_text("a b\nb c\nc d")
        # Numbering a, then d, skips b which already has weight 1.
        ordering = Ordering.from_sequence(sequence_of(path, "cbda"))
        self.assertFalse(is_valid_mcs_ordering(path, ordering))

    def test_size_mismatch(self):
        """Test an ordering of a different vertex count raises."""
        graph = graph_from_text("a b")
        with self.assertRaises(InvalidOrderingError):
            is_valid_mcs_ordering(graph, Ordering([1, 2, 3]))

    def test_complete_graph_accepts_every_permutation(self):
        """Test all n! orderings of K_n are valid for n up to 5."""
        for n in range(1, 6):
            complete = Graph.from_edges(n, itertools.combinations(range(n), 2))
            for sequence in itertools.permutations(range(n)):
                with self.subTest(n=n, sequence=sequence):
                    self.assertTrue(is_valid_mcs_ordering(complete, Ordering.from_sequence(sequence)))

    @settings(max_examples=80, deadline=None)
    @given(any_graphs(max_n=10))
    def test_weights_never_decrease(self, graph):
        """Test w(v) only grows from one step to the next."""
        steps = mcs_ordering(graph, record_trace=True).trace.steps
        for step in steps:
            self.assertTrue(all(a >= b for a, b in zip(step.weights_after, step.weights_before)))
        for earlier, later in zip(steps, steps[1:]):
            self.assertEqual(earlier.weights_after, later.weights_before)

    @settings(max_examples=100, deadline=None)
    @given(any_graphs(max_n=10), st.integers(min_value=0, max_value=10_000))
    def test_computed_orderings_are_valid(self, graph, seed):
        """Test every computed ordering passes the checker."""
        for tie_break in (TieBreak.lowest_id(), TieBreak.random(seed)):
            ordering = mcs_ordering(graph, tie_break)
            self.assertTrue(is_valid_mcs_ordering(graph, ordering))


if __name__ == '__main__':
    unittest.main()
