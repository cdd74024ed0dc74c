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
import os
import subprocess
import sys
import unittest

from cwkit import logconf


class TestBase(unittest.TestCase):
    """
    Base class for tests.
    """

    def setUp(self):
        """Start every test with warning-level application logs."""
        super().setUp()
        logconf.reset_loglevel()


def run(cmd, verbosity=0, **kwargs):
    """Run command without error checking.
    @return: command return code"""
    if kwargs.get("shell"):
        cmd = " ".join(cmd)
    return subprocess.call(cmd, **kwargs)


def run_checked(cmd, ret_ok=(0,), **kwargs):
    """Run command and raise OSError on error."""
    retcode = run(cmd, **kwargs)
    if retcode not in ret_ok:
        msg = "Command `%s' returned non-zero exit status %d" % (cmd, retcode)
        raise OSError(msg)
    return retcode


def run_cwkit(args, stdin=None, env=None):
    """Run the command line client and capture its output.

    @return: subprocess.CompletedProcess with text stdout and stderr
    """
    environ = dict(os.environ)
    environ.pop("CWKIT_MAX_DEPTH", None)
    # never pick up a user configuration
    environ["XDG_CONFIG_HOME"] = os.path.join(os.path.dirname(__file__), "data")
    if env:
        environ.update(env)
    return subprocess.run(
        [sys.executable, "-m", "cwkit"] + args,
        input=stdin,
        capture_output=True,
        text=True,
        env=environ,
    )


def get_file(filename=None):
    """
    Get file name located within 'data' directory.
    """
    directory = os.path.join(os.path.dirname(__file__), "data")
    if filename:
        return os.path.join(directory, filename)
    return directory
