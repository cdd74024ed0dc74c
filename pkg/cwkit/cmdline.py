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
Utility functions suitable for command line clients.
"""
import argparse
import sys

from .director import console


class CWArgumentParser(argparse.ArgumentParser):
    """Argument parser reporting usage errors through print_usage."""

    def error(self, message):
        print_usage(message)


def print_version(exit_code=0):
    """Print the program version and exit."""
    console.print_version()
    sys.exit(exit_code)


def print_usage(msg, exit_code=2):
    """Print a program msg text to stderr and exit."""
    program = sys.argv[0]
    print("Error: %s" % msg, file=sys.stderr)
    print("Execute '%s -h' for help" % program, file=sys.stderr)
    sys.exit(exit_code)


def print_checks(checkclasses, out=None):
    """List check names with their statements."""
    out = out if out is not None else sys.stdout
    width = max(len(cls.Name) for cls in checkclasses)
    for cls in checkclasses:
        suffix = " (--seed-check)" if cls.Golden else ""
        print(f"{cls.Name:<{width}}  {cls.Anchor}{suffix}", file=out)
