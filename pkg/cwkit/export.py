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
Transport records for command output. Producers turn tree levels and
diagonal families into Node records; the output loggers render them.
"""

import dataclasses
from typing import Optional

from .diagonals import ceil_log2, iter_diagonals
from .minkowski import qmark_diagonal_map
from .tree import level_iter, level_size

TREE = "tree"
DIAGONALS = "diagonals"
QMARK_DIAGONALS = "qmark-diagonals"
KINDS = (TREE, DIAGONALS, QMARK_DIAGONALS)


@dataclasses.dataclass(frozen=True)
class Node:
    """One rendered vertex. ident is the breadth-first rank for tree
    nodes and the diagonal index for diagonal nodes; num and den are
    only set for fractions."""

    ident: int
    parent: Optional[int]
    level: int
    position: int
    label: str
    num: Optional[int] = None
    den: Optional[int] = None


def level_nodes(n):
    """Nodes of tree level n in order."""
    rank = level_size(n)
    for position, r in enumerate(level_iter(n), start=1):
        yield Node(
            ident=rank,
            parent=rank // 2 or None,
            level=n,
            position=position,
            label=str(r),
            num=r.num,
            den=r.den,
        )
        rank += 1


def tree_nodes(depth):
    """Nodes of levels 1..depth."""
    for n in range(1, depth + 1):
        yield from level_nodes(n)


def _diagonal_shape(n):
    """(parent, level, position) of L_n in the diagonal tree: L_1 above
    L_2, and L_m above L_(2m-1) and L_2m for m >= 2."""
    if n == 1:
        return None, 1, 1
    if n == 2:
        return 1, 2, 1
    level = ceil_log2(n) + 1
    return (n + 1) // 2, level, n - level_size(level - 1)


def diagonal_nodes(depth):
    """Diagonals L_1 .. L_(2**depth) labelled (aj+b)/(cj+d)."""
    for diag in iter_diagonals(1 << depth):
        parent, level, position = _diagonal_shape(diag.index)
        yield Node(diag.index, parent, level, position, str(diag))


def qmark_diagonal_nodes(depth):
    """Images of L_1 .. L_(2**depth) under ?, labelled offset+x/2**k."""
    for i in range(1, (1 << depth) + 1):
        parent, level, position = _diagonal_shape(i)
        yield Node(i, parent, level, position, str(qmark_diagonal_map(i)))


def nodes_of_kind(kind, depth):
    """Dispatch on a graph kind from KINDS."""
    producer = {
        TREE: tree_nodes,
        DIAGONALS: diagonal_nodes,
        QMARK_DIAGONALS: qmark_diagonal_nodes,
    }[kind]
    return producer(depth)
