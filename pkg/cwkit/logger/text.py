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
Plain text output: the labels of one level on one line.
"""

from . import _Logger


class TextLogger(_Logger):
    """Writes node labels separated by a separator, one line per level."""

    LoggerName = 'text'

    LoggerArgs = {
        "filename": "cwkit-out.txt",
        "separator": " ",
    }

    def __init__(self, **kwargs):
        args = self.get_args(kwargs)
        super().__init__(**args)
        self.init_fileoutput(args)
        self.separator = args["separator"]
        self.current_level = None

    def start_output(self):
        super().start_output()
        self.current_level = None

    def log_node(self, node):
        if self.current_level == node.level:
            self.write(self.separator)
        elif self.current_level is not None:
            self.writeln()
        self.current_level = node.level
        self.write(node.label)

    def end_output(self, **kwargs):
        if self.current_level is not None:
            self.writeln()
        self.close_fileoutput()
