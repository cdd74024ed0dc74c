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
Thin wrappers around the standard logging module. Every call names
one of the log areas from logconf, and message arguments are only
formatted when the area is enabled for the level.
"""

import logging
import traceback


def _log(fun, msg, args, **kwargs):
    """Emit msg through fun. With exception=True the current
    exception traceback follows the message."""
    fun(msg, *args)
    if kwargs.get("exception"):
        fun(traceback.format_exc())


def _emit(level, method, logname, msg, args, kwargs):
    logger = logging.getLogger(logname)
    if logger.isEnabledFor(level):
        _log(getattr(logger, method), msg, args, **kwargs)


def debug(logname, msg, *args, **kwargs):
    """Log a debug message."""
    _emit(logging.DEBUG, "debug", logname, msg, args, kwargs)


def info(logname, msg, *args, **kwargs):
    """Log an informational message."""
    _emit(logging.INFO, "info", logname, msg, args, kwargs)


def warn(logname, msg, *args, **kwargs):
    """Log a warning."""
    _emit(logging.WARN, "warning", logname, msg, args, kwargs)


def error(logname, msg, *args, **kwargs):
    """Log an error."""
    _emit(logging.ERROR, "error", logname, msg, args, kwargs)


def critical(logname, msg, *args, **kwargs):
    """Log a critical error."""
    _emit(logging.CRITICAL, "critical", logname, msg, args, kwargs)


def exception(logname, msg, *args, **kwargs):
    """Log an error together with the active exception."""
    _emit(logging.ERROR, "exception", logname, msg, args, kwargs)


def shutdown():
    """Flush and close all log handlers."""
    logging.shutdown()
