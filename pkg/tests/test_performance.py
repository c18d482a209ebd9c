"""
Timing trend checks.

The small trend check always runs. The full-size checks take minutes and
only run with ATOM_DECOMPOSER_PERF=1 in the environment.
"""

import os
import sys
import unittest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.benchmark import summarize, time_decomposition
from utils.generators import random_graph_with_trees

FULL_SIZE = os.environ.get("ATOM_DECOMPOSER_PERF") == "1"
AVERAGE_DEGREE = 3.0


def mean_time(graph, algorithm: str, repeats: int) -> float:
    times, _ = time_decomposition(graph, algorithm, repeats)
    return summarize(times)[0]


class TestTrend(unittest.TestCase):
    """rda against the triangulation baseline."""

    def test_small_graph_trend(self):
        """Test rda is not slower than the baseline on a 300-vertex sparse graph."""
        graph = random_graph_with_trees(300, AVERAGE_DEGREE, seed=11)
        rda = mean_time(graph, "rda", repeats=3)
        baseline = mean_time(graph, "baseline", repeats=3)
        self.assertLessEqual(rda, baseline * 1.25)

    def test_same_atom_count(self):
        """Test both timed algorithms report the same number of atoms."""
        graph = random_graph_with_trees(200, AVERAGE_DEGREE, seed=12)
        _, rda_atoms = time_decomposition(graph, "rda", 1)
        _, baseline_atoms = time_decomposition(graph, "baseline", 1)
        self.assertEqual(rda_atoms, baseline_atoms)


@unittest.skipUnless(FULL_SIZE, "set ATOM_DECOMPOSER_PERF=1 to run full-size timings")
class TestFullSize(unittest.TestCase):
    """Acceptance-size timings."""

    def test_thousand_vertex_trend(self):
        """Test mean rda time over 20 runs is at most the baseline's on 1,000 vertices."""
        graph = random_graph_with_trees(1000, AVERAGE_DEGREE, seed=21)
        self.assertLessEqual(mean_time(graph, "rda", 20), mean_time(graph, "baseline", 20))

    def test_five_thousand_vertices_within_timeout(self):
        """Test rda finishes a 5,000-vertex sparse graph within 600 s."""
        graph = random_graph_with_trees(5000, AVERAGE_DEGREE, seed=22)
        self.assertLess(mean_time(graph, "rda", 1), 600.0)

    def test_doubling_scaling(self):
        """Test doubling n raises rda time by at most 4.5x across 1k, 2k and 4k."""
        times = [mean_time(random_graph_with_trees(n, AVERAGE_DEGREE, seed=23), "rda", 3)
                 for n in (1000, 2000, 4000)]
        for smaller, larger in zip(times, times[1:]):
            self.assertLessEqual(larger, smaller * 4.5)


if __name__ == '__main__':
    unittest.main()
