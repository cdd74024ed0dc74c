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
A CSV logger.
"""
import csv
from io import StringIO

from . import _Logger

Columns = (
    "level",
    "position",
    "num",
    "den",
)


class CSVLogger(_Logger):
    """
    CSV output with a header row and one row per node. Numerators and
    denominators are written as decimal strings of any length.
    """

    LoggerName = "csv"

    LoggerArgs = {
        "filename": "cwkit-out.csv",
        'separator': ',',
        "quotechar": '"',
        "dialect": "excel",
    }

    def __init__(self, **kwargs):
        args = self.get_args(kwargs)
        super().__init__(**args)
        self.init_fileoutput(args)
        self.separator = args['separator']
        self.quotechar = args['quotechar']
        self.dialect = args['dialect']
        self.linesep = "\n"

    def start_output(self):
        """Write the header row."""
        super().start_output()
        self.queue = StringIO()
        self.writer = csv.writer(
            self.queue,
            dialect=self.dialect,
            delimiter=self.separator,
            lineterminator=self.linesep,
            quotechar=self.quotechar,
        )
        row = [name for name in Columns if self.has_part(name)]
        if row:
            self.writerow(row)

    def log_node(self, node):
        row = []
        if self.has_part("level"):
            row.append(node.level)
        if self.has_part("position"):
            row.append(node.position)
        if self.has_part("num"):
            row.append("" if node.num is None else node.num)
        if self.has_part("den"):
            row.append("" if node.den is None else node.den)
        self.writerow(row)

    def writerow(self, row):
        """Write one row in CSV format."""
        self.writer.writerow(row)
        self.write(self.queue.getvalue())
        self.queue.seek(0)
        self.queue.truncate(0)

    def end_output(self, **kwargs):
        self.close_fileoutput()
