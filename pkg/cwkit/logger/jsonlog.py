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
JSON output of a level. Fractions are written as
{"num": "<decimal>", "den": "<decimal>"} so values of any size survive
parsers limited to 64-bit integers.
"""

import json

from . import _Logger


class JSONLogger(_Logger):
    """Streams {"level": n, "fractions": [...]} objects, one per level."""

    LoggerName = "json"

    LoggerArgs = {
        "filename": "cwkit-out.json",
    }

    def __init__(self, **kwargs):
        args = self.get_args(kwargs)
        super().__init__(**args)
        self.init_fileoutput(args)
        self.current_level = None

    def start_output(self):
        super().start_output()
        self.current_level = None

    def log_node(self, node):
        if node.level != self.current_level:
            if self.current_level is not None:
                self.writeln("]}")
            self.write('{"level": %d, "fractions": [' % node.level)
            self.current_level = node.level
        else:
            self.write(", ")
        self.write(json.dumps(self.node_entry(node)))

    def node_entry(self, node):
        """Dictionary for one node with stable key order."""
        if node.num is None:
            return {"label": node.label}
        return {"num": str(node.num), "den": str(node.den)}

    def end_output(self, **kwargs):
        if self.current_level is not None:
            self.writeln("]}")
        self.close_fileoutput()
