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
File and module probing used when reading configuration.
"""

import importlib
import os
import stat


def has_module(name):
    """Test if the named module can be imported."""
    try:
        importlib.import_module(name)
    except ImportError:
        return False
    return True


def is_readable(filename):
    return os.access(filename, os.R_OK)


def is_valid_config_source(filename):
    """Config sources are regular files or named pipes."""
    return os.path.exists(filename) and (
        os.path.isfile(filename) or stat.S_ISFIFO(os.stat(filename).st_mode)
    )
