# Copyright (C) 2024 The cwkit Authors
#
# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.
"""
Test navigation and level enumeration of the tree.
"""

import unittest

from parameterized import parameterized

from cwkit import DomainError, RootHasNoParentError
from cwkit.arith import Fraction, parse_fraction
from cwkit.tree import (
    NodeAddress,
    Path,
    address_of,
    address_of_rank,
    children,
    complexity_product,
    fraction_at,
    fraction_at_address,
    is_perfect_square,
    level_iter,
    level_of,
    level_partitions,
    level_stats,
    level_sum,
    parent,
    path_of,
    path_of_rank,
    rank_of,
    successor,
    trace_square_sum,
    unrank,
)

ROWS = {
    4: "1/4 4/3 3/5 5/2 2/5 5/3 3/4 4/1",
    5: "1/5 5/4 4/7 7/3 3/8 8/5 5/7 7/2 2/7 7/5 5/8 8/3 3/7 7/4 4/5 5/1",
}


def frac(text):
    return parse_fraction(text)[0]


def row(n):
    return " ".join(str(r) for r in level_iter(n))


class TestPath(unittest.TestCase):
    @parameterized.expand([
        ("RLLR",),
        ("R L^2 R",),
        ("r l l r",),
        ("RL^2R",),
    ])
    def test_parse(self, text):
        self.assertEqual(Path.parse(text), Path([("R", 1), ("L", 2), ("R", 1)]))

    def test_root(self):
        self.assertEqual(Path.parse("(root)"), Path())
        self.assertEqual(str(Path()), "(root)")
        self.assertFalse(Path())
        self.assertEqual(len(Path()), 0)

    @parameterized.expand([("RX",), ("L^",), ("^2",), ("L^0",)])
    def test_parse_error(self, text):
        self.assertRaises(DomainError, Path.parse, text)

    def test_runs_alternate(self):
        self.assertRaises(DomainError, Path, [("L", 1), ("L", 2)])
        self.assertRaises(DomainError, Path, [("X", 1)])
        self.assertRaises(DomainError, Path, [("L", 0)])

    def test_steps(self):
        path = Path.from_steps("RLLR")
        self.assertEqual(str(path), "R L^2 R")
        self.assertEqual(list(path.steps()), list("RLLR"))
        self.assertEqual(path.length, 4)

    def test_concat(self):
        path = Path.parse("R L").concat(Path.parse("L R"))
        self.assertEqual(path, Path.parse("R L^2 R"))
        self.assertEqual(Path.parse("R").extend("R", 3), Path([("R", 4)]))
        self.assertEqual(Path.parse("R L^2").reversed(), Path.parse("L^2 R"))

    def test_mirror(self):
        path = Path.parse("R L^2 R")
        self.assertEqual(fraction_at(path.mirror()), frac("5/7"))


class TestNavigation(unittest.TestCase):
    def test_children(self):
        self.assertEqual(children(frac("2/3")), (frac("2/5"), frac("5/3")))
        self.assertEqual(children(frac("1/1")), (frac("1/2"), frac("2/1")))

    @parameterized.expand([
        ("7/5", "2/5"),
        ("2/5", "2/3"),
        ("2/3", "2/1"),
        ("2/1", "1/1"),
        ("1/2", "1/1"),
    ])
    def test_parent(self, child, expected):
        self.assertEqual(parent(frac(child)), frac(expected))

    def test_root_parent(self):
        self.assertRaises(RootHasNoParentError, parent, Fraction(1, 1))
        self.assertRaises(DomainError, parent, Fraction(1, 1))

    def test_parent_of_children(self):
        for r in level_iter(4):
            for child in children(r):
                self.assertEqual(parent(child), r)

    def test_path(self):
        r = frac("7/5")
        self.assertEqual(str(path_of(r)), "R L^2 R")
        self.assertEqual(fraction_at(path_of(r)), r)
        self.assertEqual(path_of(Fraction(1, 1)), Path())

    def test_long_runs(self):
        r = Fraction(1, 10 ** 6)
        self.assertEqual(path_of(r), Path([("L", 10 ** 6 - 1)]))
        self.assertEqual(fraction_at(path_of(r)), r)
        self.assertEqual(level_of(Fraction(10 ** 6, 1)), 10 ** 6)

    @parameterized.expand([
        (1, "1/1"),
        (2, "1/2"),
        (3, "2/1"),
        (7, "3/1"),
        (25, "7/5"),
    ])
    def test_rank(self, k, text):
        r = frac(text)
        self.assertEqual(unrank(k), r)
        self.assertEqual(rank_of(r), k)

    def test_rank_invalid(self):
        self.assertRaises(DomainError, unrank, 0)
        self.assertRaises(DomainError, path_of_rank, -3)

    def test_address(self):
        self.assertEqual(address_of(frac("7/5")), NodeAddress(5, 10))
        self.assertEqual(address_of_rank(25), NodeAddress(5, 10))
        self.assertEqual(NodeAddress(5, 10).rank, 25)
        self.assertEqual(fraction_at_address(NodeAddress(4, 6)), frac("5/3"))

    @parameterized.expand([(0, 1), (3, 0), (3, 5)])
    def test_address_invalid(self, level, position):
        self.assertRaises(DomainError, NodeAddress, level, position)

    @parameterized.expand([
        ("1/1", "1/2"),
        ("1/2", "2/1"),
        ("3/1", "1/4"),
        ("7/5", "5/8"),
        ("5/1", "1/6"),
    ])
    def test_successor(self, text, expected):
        self.assertEqual(successor(frac(text)), frac(expected))


class TestLevels(unittest.TestCase):
    @parameterized.expand([(4,), (5,)])
    def test_rows(self, n):
        self.assertEqual(row(n), ROWS[n])

    def test_first_rows(self):
        self.assertEqual(row(1), "1/1")
        self.assertEqual(row(2), "1/2 2/1")
        self.assertEqual(row(3), "1/3 3/2 2/3 3/1")

    def test_range(self):
        self.assertEqual(
            [str(r) for r in level_iter(5, 9, 12)], ["2/7", "7/5", "5/8", "8/3"]
        )
        self.assertEqual([str(r) for r in level_iter(3, 4)], ["3/1"])

    @parameterized.expand([(0, 1, None), (3, 0, None), (3, 3, 2), (3, 1, 5)])
    def test_range_invalid(self, n, start, stop):
        self.assertRaises(DomainError, list, level_iter(n, start, stop))

    def test_partitions(self):
        self.assertEqual(list(level_partitions(4, 3)), [(1, 3), (4, 6), (7, 8)])
        self.assertEqual(list(level_partitions(1, 4)), [(1, 1)])
        parts = list(level_partitions(6, 5))
        self.assertEqual(sum(stop - start + 1 for start, stop in parts), 32)

    def test_partitions_cover_level(self):
        pieces = [
            str(r)
            for start, stop in level_partitions(5, 3)
            for r in level_iter(5, start, stop)
        ]
        self.assertEqual(" ".join(pieces), ROWS[5])

    @parameterized.expand([
        (1, "1/1"),
        (2, "5/2"),
        (3, "11/2"),
        (4, "23/2"),
    ])
    def test_level_sum(self, n, expected):
        self.assertEqual(level_sum(n), frac(expected))

    def test_stats(self):
        stats = level_stats(3)
        self.assertEqual(stats.count, 4)
        self.assertEqual(stats.sum, frac("11/2"))
        self.assertEqual(stats.trace_sum, 18)
        self.assertEqual(stats.complexity_sum, 18)
        self.assertEqual(stats.product, Fraction(1, 1))
        self.assertEqual(stats.complexity_product, 324)
        self.assertEqual(stats.prev_trace_square_sum, 18)

    def test_stats_streamed_only(self):
        stats = level_stats(3, squares=False, previous=False)
        self.assertIsNone(stats.complexity_product)
        self.assertIsNone(stats.prev_trace_square_sum)
        self.assertEqual(stats.complexity_sum, 18)

    def test_square_helpers(self):
        self.assertEqual(complexity_product(3), 324)
        self.assertEqual(trace_square_sum(2), 18)
        self.assertEqual(trace_square_sum(1), 4)

    def test_stats_root(self):
        stats = level_stats(1)
        self.assertIsNone(stats.prev_trace_square_sum)
        self.assertEqual(stats.simplicity_sum, Fraction(1, 1))
        self.assertEqual(stats.trace_sum, 2)

    def test_perfect_square(self):
        self.assertTrue(is_perfect_square(0))
        self.assertTrue(is_perfect_square(36))
        self.assertTrue(is_perfect_square(10 ** 40))
        self.assertFalse(is_perfect_square(35))
        self.assertFalse(is_perfect_square(-4))
