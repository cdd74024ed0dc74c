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
Exact computations on the Calkin-Wilf tree. This is the commandline
client. Run it with the -h option to see how it's done.
"""

import pprint
import sys

from .arg_parser import ArgParser
from .setup_config import setup_config, get_selection

from .. import configuration
from .. import fileutil
from .. import log
from .. import logconf
from .. import CWKitError, ResourceLimitError
from .. import checks, director, export, query
from ..cmdline import print_checks, print_usage, print_version
from ..director import console
from ..logconf import LOG_CMDLINE

# default number of levels for the dot command
DOT_DEPTH = 5

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def read_config(options):
    """Build the configuration from files, environment and options."""
    config = configuration.Configuration()
    try:
        files = []
        if options.configfile:
            path = configuration.normpath(options.configfile)
            if not fileutil.is_valid_config_source(path):
                raise CWKitError("Config file %s does not exist." % options.configfile)
            elif not fileutil.is_readable(path):
                raise CWKitError("Could not read config file %s." % options.configfile)
            files.append(path)
        config.read(files=files)
    except CWKitError as msg:
        print_usage(str(msg))
    config.read_environment()
    setup_config(config, options)
    config.sanitize()
    log.debug(LOG_CMDLINE, "configuration: %s", pprint.pformat(sorted(config.items())))
    return config


def cmd_level(config, options):
    director.check_depth(config, "level", options.level)
    if options.level < 1:
        print_usage("level must be positive, got %d" % options.level)
    director.write_nodes(config, export.level_nodes(options.level))
    return EXIT_OK


def cmd_dot(config, options):
    depth = DOT_DEPTH if options.depth is None else options.depth
    if depth < 1:
        print_usage("depth must be positive, got %d" % depth)
    limit = None
    if options.kind == export.QMARK_DIAGONALS:
        limit = config["qmaxdepth"]
    director.check_depth(config, "%s depth" % options.kind, depth, limit=limit)
    if config["output"] != "dot":
        config["logger"] = config.logger_new("dot")
    director.write_nodes(config, export.nodes_of_kind(options.kind, depth))
    return EXIT_OK


def cmd_query(config, options):
    if options.expr:
        lines = [" ".join(options.expr)]
    else:
        lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
    for line in lines:
        try:
            answer = query.run_query(line)
        except query.QuerySyntaxError as msg:
            print_usage(str(msg))
        for notice in answer.notices:
            print("note: %s" % notice, file=sys.stderr)
        for text in answer.lines:
            print(text)
    return EXIT_OK


def cmd_verify(config, options):
    depth = config["depth"]
    if depth < 2:
        print_usage("verification depth must be at least 2, got %d" % depth)
    scale = director.get_scale(config, depth)
    try:
        selected = checks.select_checks(get_selection(options), golden=options.seedcheck)
    except CWKitError as msg:
        print_usage(str(msg))
    report = director.run_checks(config, selected, scale)
    print(report.to_json())
    if not config["quiet"]:
        console.print_report_table(report)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_checks(config, options):
    print_checks(checks.CheckClasses)
    return EXIT_OK


Commands = {
    "level": cmd_level,
    "dot": cmd_dot,
    "query": cmd_query,
    "verify": cmd_verify,
    "checks": cmd_checks,
}


def cwkit():
    logconf.init_log_config()

    # optional modules
    has_argcomplete = fileutil.has_module("argcomplete")

    # instantiate command line option parser
    argparser = ArgParser()

    # ================= auto completion =====================
    if has_argcomplete:
        import argcomplete

        argcomplete.autocomplete(argparser)

    # read and parse command line options and arguments
    options = argparser.parse_args()
    if options.version:
        print_version()
    if not options.command:
        print_usage("no command given")
    # configure application logging
    if options.debug:
        allowed_debugs = logconf.lognames.keys()
        for _name in options.debug:
            if _name not in allowed_debugs:
                print_usage("Invalid debug level %r" % _name)
        logconf.set_debug(options.debug)
    elif options.quiet:
        logconf.reset_loglevel()
    log.debug(LOG_CMDLINE, "Python %s on %s", sys.version, sys.platform)
    config = read_config(options)
    try:
        exit_code = Commands[options.command](config, options)
    except ResourceLimitError as msg:
        print("Error: %s" % msg, file=sys.stderr)
        exit_code = EXIT_USAGE
    except CWKitError as msg:
        print_usage(str(msg))
    except KeyboardInterrupt:
        log.warn(LOG_CMDLINE, "interrupted")
        exit_code = EXIT_INTERNAL
    except Exception:
        console.internal_error()
        exit_code = EXIT_INTERNAL
    log.shutdown()
    sys.exit(exit_code)
