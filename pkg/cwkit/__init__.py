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
Exact arithmetic on the Calkin-Wilf tree: navigation, continued
fractions, diagonal sequences and the Minkowski question-mark function.
"""

# version checks
import sys

if sys.version_info < (3, 9, 0, 'final', 0):
    import platform

    raise SystemExit(
        "This program requires Python 3.9 or later instead of %s."
        % platform.python_version()
    )

from . import log
from .logconf import (
    LOG_ROOT,
    LOG_CMDLINE,
    LOG_TREE,
    LOG_CF,
    LOG_DIAGONAL,
    LOG_QMARK,
    LOG_VERIFY,
    LOG_THREAD,
)

COMMAND_NAME = "cwkit"


class CWKitError(Exception):
    """Base class of all errors raised by this package."""

    pass


class DomainError(CWKitError, ValueError):
    """An argument lies outside the domain of the operation."""

    pass


class RootHasNoParentError(DomainError):
    """The root 1/1 was asked for its parent."""

    pass


class InternalInconsistencyError(CWKitError):
    """A derived structure failed its own verification."""

    pass


class ResourceLimitError(CWKitError):
    """A request exceeds the configured depth threshold."""

    def __init__(self, what, value, limit):
        """Store the offending request and the active limit."""
        super().__init__(
            "refusing %s %d: exceeds the maximum depth %d"
            " (raise it with --max-depth or CWKIT_MAX_DEPTH)" % (what, value, limit)
        )
        self.value = value
        self.limit = limit
