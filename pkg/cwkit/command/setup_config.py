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
Configure cwkit using command-line options and configuration.
"""

from .. import logger, log, LOG_CMDLINE
from ..cmdline import print_usage


def setup_config(config, options):
    """Apply command-line options on top of the file configuration."""
    if options.debug and not __debug__:
        log.warn(LOG_CMDLINE, "Running with python -O disables debugging.")
    if options.maxdepth is not None:
        if options.maxdepth < 1:
            print_usage(
                "Illegal argument %r for option '--max-depth'" % options.maxdepth
            )
        config["maxdepth"] = options.maxdepth
    if options.output:
        logtype = options.output.lower()
        if logtype not in logger.LoggerNames:
            print_usage(
                "Unknown output type %r for option '-o, --format'" % options.output
            )
        config["output"] = logtype
        config["logger"] = config.logger_new(logtype)
    if options.fileoutput:
        for arg in options.fileoutput:
            ns = {"fileoutput": 1}
            ftype, _, filename = arg.partition("/")
            if filename:
                ns["filename"] = filename
            ftype = ftype.lower()
            if ftype not in logger.LoggerNames:
                print_usage(
                    "Unknown output type %r in %r for option '-F, --file-output'"
                    % (ftype, arg)
                )
            config["fileoutput"].append(config.logger_new(ftype, **ns))
    if options.quiet:
        config["quiet"] = True
        config["status"] = False
    if options.status is not None:
        config["status"] = options.status
    if options.threads is not None:
        config["threads"] = max(0, options.threads)
    for key in ("depth", "seed", "samples"):
        value = getattr(options, key, None)
        if value is not None:
            config[key] = value
    if config["samples"] < 1:
        print_usage("Illegal argument %r for option '--samples'" % config["samples"])


def get_selection(options):
    """Check names from the --select options, or None for all checks."""
    if not getattr(options, "select", None):
        return None
    names = []
    for arg in options.select:
        names.extend(name.strip() for name in arg.split(",") if name.strip())
    return names
