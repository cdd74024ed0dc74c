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
Helpers for console output.
"""
import os
import sys
import time
import traceback

from .. import configuration


class StatusLogger:
    """Progress lines of a verification run. Default output is stderr."""

    def __init__(self, fd=None):
        self.fd = fd if fd is not None else sys.stderr

    def log_status(self, done, total, duration):
        """Write one progress line."""
        self.writeln(
            "%3d of %d checks done, runtime %.1f seconds" % (done, total, duration)
        )
        self.flush()

    def write(self, msg):
        self.fd.write(msg)

    def writeln(self, msg):
        self.fd.write(f"{msg}{os.linesep}")

    def flush(self):
        self.fd.flush()


def print_report_table(report, out=None):
    """Human-readable summary of a VerifyReport."""
    out = out if out is not None else sys.stderr
    width = max((len(check.name) for check in report.checks), default=4)
    print(f"{'check':<{width}}  status  instances", file=out)
    for check in report.checks:
        print(
            f"{check.name:<{width}}  {check.status:<6}  {check.instances:>9}",
            file=out,
        )
        if check.counterexample is not None:
            print(f"{'':<{width}}  counterexample: {check.counterexample}", file=out)
    passed = sum(1 for check in report.checks if check.passed)
    print(
        "depth %d: %d of %d checks passed" % (report.depth, passed, len(report.checks)),
        file=out,
    )


def internal_error(out=None, etype=None, evalue=None, tb=None):
    """Print internal error message (output defaults to stderr)."""
    out = out if out is not None else sys.stderr
    print(os.linesep, file=out)
    print(
        """********** Internal error *************

You have found an internal error in %s. Please report it and
include the following information:
- your command line arguments and any custom configuration files
- the output of a debug run with option "-Dall"
- the system information below
"""
        % configuration.AppName,
        file=out,
    )
    if etype is None:
        etype, evalue, tb = sys.exc_info()
    traceback.print_exception(etype, evalue, tb, file=out)
    print_app_info(out=out)
    print(os.linesep, "******** internal error, over and out ********", file=out)


def print_env_info(key, out=None):
    """If given environment key is defined, print it out."""
    value = os.getenv(key)
    if value is not None:
        print(key, "=", repr(value), file=out or sys.stderr)


# Environment variables influencing the run
ENV_VARS = (
    configuration.MAX_DEPTH_ENV,
    'XDG_CONFIG_HOME',
    'PYTHONHASHSEED',
    'PYTHONPATH',
)


def print_app_info(out=None):
    """Print system and application info (output defaults to stderr)."""
    out = out if out is not None else sys.stderr
    print("System info:", file=out)
    print(configuration.App, file=out)
    print("Released on:", configuration.ReleaseDate, file=out)
    print(f"Python {sys.version} on {sys.platform}", file=out)
    for key in ENV_VARS:
        print_env_info(key, out=out)
    print(configuration.get_modules_info(), file=out)
    print("Local time:", time.strftime("%Y-%m-%d %H:%M:%S"), file=out)
    print("sys.argv:", sys.argv, file=out)


def print_version(out=None):
    """Print the program version (output defaults to stdout)."""
    out = out if out is not None else sys.stdout
    print(configuration.App, "released", configuration.ReleaseDate, file=out)
    print(configuration.Copyright, file=out)
    print(configuration.Freeware, file=out)
