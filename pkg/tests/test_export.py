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
Test node export for the graph loggers.
"""

import unittest

from cwkit.export import (
    DIAGONALS,
    KINDS,
    Node,
    diagonal_nodes,
    level_nodes,
    nodes_of_kind,
    qmark_diagonal_nodes,
    tree_nodes,
)


class TestExport(unittest.TestCase):
    def test_level_nodes(self):
        nodes = list(level_nodes(3))
        self.assertEqual([node.ident for node in nodes], [4, 5, 6, 7])
        self.assertEqual([node.parent for node in nodes], [2, 2, 3, 3])
        self.assertEqual(nodes[1], Node(5, 2, 3, 2, "3/2", num=3, den=2))

    def test_tree_nodes(self):
        nodes = list(tree_nodes(3))
        self.assertEqual(len(nodes), 7)
        self.assertIsNone(nodes[0].parent)

    def test_diagonal_shape(self):
        nodes = list(diagonal_nodes(3))
        self.assertEqual(len(nodes), 8)
        shape = [(node.ident, node.parent, node.level, node.position) for node in nodes]
        self.assertEqual(shape[:4], [(1, None, 1, 1), (2, 1, 2, 1), (3, 2, 3, 1), (4, 2, 3, 2)])
        self.assertEqual(shape[-1], (8, 4, 4, 4))
        self.assertIsNone(nodes[0].num)

    def test_qmark_labels(self):
        labels = [node.label for node in qmark_diagonal_nodes(2)]
        self.assertEqual(labels, ["x", "1+x", "1/2+x/4", "2+x"])

    def test_kinds(self):
        self.assertEqual(len(KINDS), 3)
        labels = [node.label for node in nodes_of_kind(DIAGONALS, 1)]
        self.assertEqual(labels, ["1/j", "(j+1)/j"])
