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
Comparisons against fixed reference tables. Run with --seed-check.
"""

from . import _Check
from ..diagonals import iter_diagonals
from ..minkowski import qmark_diagonal_map
from ..tree import level_iter

TREE_ROWS = (
    "1/1",
    "1/2 2/1",
    "1/3 3/2 2/3 3/1",
    "1/4 4/3 3/5 5/2 2/5 5/3 3/4 4/1",
    "1/5 5/4 4/7 7/3 3/8 8/5 5/7 7/2 2/7 7/5 5/8 8/3 3/7 7/4 4/5 5/1",
)

DIAGONALS = (
    "1/j",
    "(j+1)/j",
    "(j+1)/(2j+1)",
    "(2j+1)/j",
    "(j+1)/(3j+2)",
    "(3j+2)/(2j+1)",
    "(2j+1)/(3j+1)",
    "(3j+1)/j",
    "(j+1)/(4j+3)",
    "(4j+3)/(3j+2)",
    "(3j+2)/(5j+3)",
    "(5j+3)/(2j+1)",
    "(2j+1)/(5j+2)",
    "(5j+2)/(3j+1)",
    "(3j+1)/(4j+1)",
    "(4j+1)/j",
)

COEFFICIENTS = (
    "0/1 1/1 1/2 2/1 1/3 3/2 2/3 3/1 1/4 4/3 3/5 5/2 2/5 5/3 3/4 4/1"
).split()

CONSTANTS = (
    "1/0 1/0 1/1 1/0 1/2 2/1 1/1 1/0 1/3 3/2 2/3 3/1 1/2 2/1 1/1 1/0"
).split()

QMARK_MAPS = (
    "x", "1+x", "1/2+x/4", "2+x",
    "1/4+x/8", "3/2+x/4", "3/4+x/8", "3+x",
    "1/8+x/16", "5/4+x/8", "5/8+x/16", "5/2+x/4",
    "3/8+x/16", "7/4+x/8", "7/8+x/16", "4+x",
    "1/16+x/32", "9/8+x/16", "9/16+x/32", "9/4+x/8",
    "5/16+x/32", "13/8+x/16", "13/16+x/32", "7/2+x/4",
    "3/16+x/32", "11/8+x/16", "11/16+x/32", "11/4+x/8",
    "7/16+x/32", "15/8+x/16", "15/16+x/32", "5+x",
)


class _GoldenCheck(_Check):
    Group = "golden"
    Golden = True

    def compare(self, result, label, expected, actual):
        result.record(
            expected == actual, "%s: expected %s, got %s", label, expected, actual
        )


class TreeRowsGolden(_GoldenCheck):
    Name = "tree-rows-golden"
    Anchor = "levels 1 to 5 of the tree match the reference rows"

    def check(self, result):
        for n, row in enumerate(TREE_ROWS, start=1):
            actual = " ".join(str(r) for r in level_iter(n))
            self.compare(result, f"level {n}", row, actual)


class DiagonalListGolden(_GoldenCheck):
    Name = "diagonal-list-golden"
    Anchor = "the diagonals L_1 to L_16 match the reference list"

    def check(self, result):
        for diag in iter_diagonals(len(DIAGONALS)):
            self.compare(
                result, f"L_{diag.index}", DIAGONALS[diag.index - 1], str(diag)
            )


def _pair(pair):
    return "%d/%d" % pair


class CoefficientTreeGolden(_GoldenCheck):
    Name = "coefficient-tree-golden"
    Anchor = "the coefficients a/c of L_1 to L_16 form the reference tree"

    def check(self, result):
        for diag in iter_diagonals(len(COEFFICIENTS)):
            self.compare(
                result,
                f"L_{diag.index}",
                COEFFICIENTS[diag.index - 1],
                _pair(diag.coefficients),
            )


class ConstantTreeGolden(_GoldenCheck):
    Name = "constant-tree-golden"
    Anchor = "the constants b/d of L_1 to L_16 form the reference tree"

    def check(self, result):
        for diag in iter_diagonals(len(CONSTANTS)):
            self.compare(
                result,
                f"L_{diag.index}",
                CONSTANTS[diag.index - 1],
                _pair(diag.constants),
            )


class QmarkDiagonalGolden(_GoldenCheck):
    Name = "qmark-diagonal-golden"
    Anchor = "the images of L_1 to L_32 under ? match the reference maps"

    def check(self, result):
        for i, expected in enumerate(QMARK_MAPS, start=1):
            self.compare(result, f"?(L_{i})", expected, str(qmark_diagonal_map(i)))
