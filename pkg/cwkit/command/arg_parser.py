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
Create command line arguments.
"""

import argparse

from .. import logconf, logger, COMMAND_NAME
from ..cmdline import CWArgumentParser
from ..export import KINDS

Examples = r"""EXAMPLES
Print level 4 of the tree:
  cwkit level 4
Export the diagonal tree as a Graphviz graph:
  cwkit dot diagonals --depth 4 > diagonals.dot
Ask for the continued fraction and the question-mark value of 7/5:
  cwkit query cf 7/5
  cwkit query qmark 7/5
Verify all identities at depth 12 with the reference tables:
  cwkit verify --depth 12 --seed-check > report.json
"""

Queries = r"""QUERIES
path p/q        root-to-node path, e.g. "R L^2 R"
at PATH         fraction at a path
cf p/q          canonical continued fraction
eval [a0; ...]  value of a continued fraction
qmark p/q       Minkowski question-mark value
diag n [j]      diagonal L_n, or its element j
rank p/q        breadth-first rank; unrank k is the inverse
member p/q n    column j with element j of L_n equal to p/q
parent, children, level p/q; stern m; limit n; qmap i; qformula i
"""

Retval = r"""RETURN VALUE
 0  success, and for verify all selected checks passed
 1  a verification check failed
 2  usage error or a request beyond the maximum depth
 3  internal error
"""

Epilog = "\n".join((Examples, Queries, Retval))


class ArgParser(CWArgumentParser):
    """Create a parser for command line arguments"""

    def __init__(self):
        super().__init__(
            epilog=Epilog,
            formatter_class=argparse.RawDescriptionHelpFormatter,
            prog=COMMAND_NAME,
        )
        common = argparse.ArgumentParser(add_help=False)

        # ================== general options =====================
        group = common.add_argument_group("General options")
        group.add_argument(
            "-f",
            "--config",
            dest="configfile",
            metavar="FILENAME",
            help=(
                "Use FILENAME as configuration file. Per default cwkit uses\n"
                "$XDG_CONFIG_HOME/cwkit/cwkitrc."
            ),
        )
        group.add_argument(
            "-t",
            "--threads",
            type=int,
            metavar="NUMBER",
            help=(
                "Run verification checks in NUMBER threads. Default is 4.\n"
                "A non-positive number runs the checks in the main thread."
            ),
        )
        group.add_argument(
            "--max-depth",
            type=int,
            dest="maxdepth",
            metavar="NUMBER",
            help=(
                "Refuse requests deeper than NUMBER. Default is 20;\n"
                "the environment variable CWKIT_MAX_DEPTH sets it as well."
            ),
        )

        # ================== output options =====================
        group = common.add_argument_group("Output options")
        group.add_argument(
            "-D",
            "--debug",
            action="append",
            metavar="STRING",
            help=(
                "Print debugging output for the given log area.\n"
                "Available areas are %(lognamelist)s.\n"
                "Specifying 'all' is an alias for all areas."
            )
            % {"lognamelist": logconf.lognamelist},
        )
        group.add_argument(
            "-o",
            "--format",
            "--output",
            dest="output",
            metavar="TYPE",
            help=(
                "Output type %(loggertypes)s. Default output type is text."
            )
            % {"loggertypes": logger.LoggerKeys},
        )
        group.add_argument(
            "-F",
            "--file-output",
            action="append",
            dest="fileoutput",
            metavar="TYPE[/FILENAME]",
            help=(
                "Also write output to the file cwkit-out.TYPE, or FILENAME\n"
                "if specified. Can be given more than once."
            ),
        )
        group.add_argument(
            "--no-status",
            action="store_false",
            default=None,
            dest="status",
            help="Do not print check status messages.",
        )
        group.add_argument(
            "-q",
            "--quiet",
            action="store_true",
            dest="quiet",
            help="Quiet operation: no status messages and no summary table.",
        )

        self.add_argument(
            "-V", "--version", action="store_true", help="Print version and exit."
        )
        commands = self.add_subparsers(
            dest="command", metavar="COMMAND", parser_class=CWArgumentParser
        )

        parser = commands.add_parser(
            "level", parents=[common], help="print one level of the tree"
        )
        parser.add_argument("level", type=int, metavar="N")

        parser = commands.add_parser(
            "dot", parents=[common], help="export a tree as a DOT graph"
        )
        parser.add_argument("kind", choices=KINDS, metavar="KIND",
                            help="one of %s" % ", ".join(KINDS))
        parser.add_argument("--depth", type=int, metavar="NUMBER",
                            help="number of levels to export, default 5")

        parser = commands.add_parser(
            "query", parents=[common], help="answer a query, see QUERIES"
        )
        parser.add_argument(
            "expr",
            nargs=argparse.REMAINDER,
            metavar="EXPR",
            help="query words; without them, one query per line from stdin",
        )

        parser = commands.add_parser(
            "verify", parents=[common], help="run the verification suite"
        )
        parser.add_argument("--depth", type=int, metavar="NUMBER",
                            help="verification depth, default 10")
        parser.add_argument(
            "--select",
            action="append",
            metavar="NAMES",
            help="comma separated check names, or 'all'",
        )
        parser.add_argument(
            "--seed-check",
            action="store_true",
            dest="seedcheck",
            help="also compare against the reference tables",
        )
        parser.add_argument("--seed", type=int, metavar="NUMBER",
                            help="seed of the sampled checks")
        parser.add_argument("--samples", type=int, metavar="NUMBER",
                            help="draws per sampled check")

        commands.add_parser(
            "checks", parents=[common], help="list the verification checks"
        )
