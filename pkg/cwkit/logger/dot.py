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
A DOT graph format logger. The format is described at
https://www.graphviz.org/doc/info/lang.html
"""
from .graph import _GraphLogger


class DOTLogger(_GraphLogger):
    """
    Undirected DOT graphs with node idents as DOT ids. Output carries
    no dates, so repeated runs are byte-identical.
    """

    LoggerName = "dot"

    LoggerArgs = {
        "filename": "cwkit-out.dot",
        "encoding": "ascii",
    }

    def start_output(self):
        super().start_output()
        self.writeln("graph G {")
        self.flush()

    def log_node(self, node):
        """Write one node."""
        if self.get_node(node) is not None:
            self.writeln('  %d [label="%s"];' % (node.ident, dotquote(node.label)))

    def write_edge(self, node):
        """Write edge from parent to node."""
        self.writeln("  %d -- %d;" % (node.parent, node.ident))

    def end_graph(self):
        self.writeln("}")


def dotquote(s):
    """Quote string for usage in DOT output format."""
    return s.replace('"', '\\"')
