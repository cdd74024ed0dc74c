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
Logging configuration
"""
import logging.config
import sys

# application log areas
LOG_ROOT = "cwkit"
LOG_CMDLINE = "cwkit.cmdline"
LOG_TREE = "cwkit.tree"
LOG_CF = "cwkit.cf"
LOG_DIAGONAL = "cwkit.diagonal"
LOG_QMARK = "cwkit.qmark"
LOG_VERIFY = "cwkit.verify"
LOG_THREAD = "cwkit.thread"
lognames = {
    "cmdline": LOG_CMDLINE,
    "tree": LOG_TREE,
    "cf": LOG_CF,
    "diagonal": LOG_DIAGONAL,
    "qmark": LOG_QMARK,
    "verify": LOG_VERIFY,
    "thread": LOG_THREAD,
    "all": LOG_ROOT,
}

lognamelist = ", ".join(repr(name) for name in lognames)

configdict = {
    'version': 1,
    'loggers': {},
    'root': {'level': 'WARN'},
    'incremental': True,
}

LOG_FORMAT = "%(levelname)s %(name)s %(asctime)s %(threadName)s %(message)s"


def init_log_config(handler=None):
    """Set up the application log. Command output never goes through it."""
    for applog in lognames.values():
        propagate = applog != LOG_ROOT
        configdict['loggers'][applog] = dict(level='WARN', propagate=propagate)
    logging.config.dictConfig(configdict)
    if handler is None:
        handler = logging.StreamHandler(sys.stderr)
    add_loghandler(handler)


def add_loghandler(handler):
    """Attach handler to the package logger with the common format."""
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logging.getLogger(LOG_ROOT).addHandler(handler)


def reset_loglevel():
    """Only show warnings and errors."""
    set_loglevel(['all'], logging.WARN)


def set_debug(loggers):
    """Set debugging log level."""
    set_loglevel(loggers, logging.DEBUG)


def set_loglevel(loggers, level):
    """Set logging levels for given loggers."""
    if not loggers:
        return
    if 'all' in loggers:
        loggers = lognames.keys()
    for key in loggers:
        logging.getLogger(lognames[key]).setLevel(level)
