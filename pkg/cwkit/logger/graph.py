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
Base class for graph loggers.
"""
from . import _Logger
from ..decorators import notimplemented


class _GraphLogger(_Logger):
    """Collect nodes by ident and write the edges at the end."""

    def __init__(self, **kwargs):
        args = self.get_args(kwargs)
        super().__init__(**args)
        self.init_fileoutput(args)
        self.nodes = {}

    def start_output(self):
        super().start_output()
        self.nodes = {}

    def get_node(self, node):
        """Remember node; return None if its ident was seen before."""
        if node.ident in self.nodes:
            return None
        self.nodes[node.ident] = node
        return node

    def write_edges(self):
        """Write an edge for every node whose parent was logged."""
        for node in self.nodes.values():
            if node.parent in self.nodes:
                self.write_edge(node)
        self.flush()

    @notimplemented
    def write_edge(self, node):
        """Write edge data for one node and its parent."""
        pass

    @notimplemented
    def end_graph(self):
        """Write end-of-graph marker."""
        pass

    def end_output(self, **kwargs):
        self.write_edges()
        self.end_graph()
        self.close_fileoutput()
