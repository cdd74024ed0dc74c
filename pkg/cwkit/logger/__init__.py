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
Output loggers for command results.
"""

import abc
import codecs
import os
import sys

from .. import log, LOG_ROOT

Fields = dict(
    level="Level",
    position="Position",
    num="Numerator",
    den="Denominator",
    label="Label",
    ident="Rank",
)


class _NullOutput:
    """Swallows writes after an output failure."""

    def write(self, data):
        pass

    def flush(self):
        pass

    def close(self):
        pass


class _Logger(abc.ABC):
    """
    Base class for the output of nodes. Every logger offers:

    * start_output()
        Start output. Call the base class implementation first.
    * log_node(node)
        Render one export.Node.
    * end_output()
        Finish output and close files.
    """

    # A lowercase name for this logger, usable for option values
    LoggerName = None

    # Default log configuration
    LoggerArgs = {}

    def __init__(self, **args):
        if 'parts' in args and "all" not in args['parts']:
            self.logparts = args['parts']
        else:
            self.logparts = None
        encoding = args.get("encoding", "utf-8")
        try:
            encoding = codecs.lookup(encoding).name
        except LookupError:
            encoding = "utf-8"
        self.output_encoding = encoding
        self.codec_errors = "replace"
        # number of logged nodes
        self.number = 0
        # deactivated on output errors
        self.is_active = True

    def get_args(self, kwargs):
        """Construct log configuration from default and user args."""
        args = dict(self.LoggerArgs)
        args.update(kwargs)
        return args

    def init_fileoutput(self, args):
        """
        Initialize self.fd from args. For file output (the fileoutput
        arg is given) the file is opened on the first write, so no empty
        file is left behind when nothing is written.
        """
        self.filename = None
        self.close_fd = False
        self.fd = None
        if args.get('fileoutput'):
            self.filename = os.path.expanduser(args['filename'])
        elif 'fd' in args:
            self.fd = args['fd']
        else:
            self.fd = self.create_fd()

    def start_fileoutput(self):
        """Open the configured output file."""
        path = os.path.dirname(self.filename)
        try:
            if path and not os.path.isdir(path):
                os.makedirs(path)
            self.fd = self.create_fd()
            self.close_fd = True
        except OSError as msg:
            log.warn(
                LOG_ROOT,
                "Could not open file %r for writing: %s\n"
                "Disabling output of %s",
                self.filename,
                msg,
                self,
            )
            self.fd = _NullOutput()
            self.is_active = False
        self.filename = None

    def create_fd(self):
        """Open stdout or the output file."""
        if self.filename is None:
            return sys.stdout
        return open(
            self.filename,
            "w",
            encoding=self.output_encoding,
            errors=self.codec_errors,
            newline="",
        )

    def close_fileoutput(self):
        """Flush and close the file output denoted by self.fd."""
        if self.fd is not None:
            try:
                self.flush()
            except OSError:
                pass
            if self.close_fd:
                try:
                    self.fd.close()
                except OSError:
                    pass
            self.fd = None

    def write(self, s):
        """Write string to the output descriptor."""
        if self.filename is not None:
            self.start_fileoutput()
        if self.fd is None:
            log.warn(LOG_ROOT, "writing to uninitialized or closed file")
            return
        try:
            self.fd.write(s)
        except OSError as msg:
            log.warn(
                LOG_ROOT,
                "Could not write to output file: %s\nDisabling output of %s",
                msg,
                self,
            )
            self.close_fileoutput()
            self.fd = _NullOutput()
            self.is_active = False

    def writeln(self, s=""):
        self.write(f"{s}\n")

    def has_part(self, name):
        """See if given part name will be logged."""
        if self.logparts is None:
            return True
        return name in self.logparts

    def part(self, name):
        """Return the display name of a part."""
        return Fields.get(name, "")

    def start_output(self):
        """Start output of a node sequence."""
        self.number = 0

    def log_filter_node(self, node):
        """Count and log one node."""
        self.number += 1
        self.log_node(node)

    @abc.abstractmethod
    def log_node(self, node):
        """Render one node."""
        pass

    @abc.abstractmethod
    def end_output(self, **kwargs):
        """End of output, flushing buffers and closing files."""
        pass

    def __str__(self):
        return self.__class__.__name__

    def __repr__(self):
        return repr(self.__class__.__name__)

    def flush(self):
        """
        Flush the output descriptor, ignoring I/O errors of streams we
        do not own.
        """
        if getattr(self, "fd", None) is not None:
            try:
                self.fd.flush()
            except (OSError, AttributeError):
                pass


def _get_loggers():
    """Return list of Logger classes."""
    from .. import loader

    modules = loader.get_package_modules('logger', __path__)
    return list(loader.get_plugins(modules, [_Logger]))


LoggerClasses = _get_loggers()
LoggerNames = [x.LoggerName for x in LoggerClasses]
LoggerKeys = ", ".join(repr(x) for x in LoggerNames)
