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
Store metadata and options.
"""

import os
import sys

from .. import log, LOG_ROOT, fileutil
from . import confparse

try:
    from .. import _release
except ImportError:
    # source checkout without a build
    _release = None

Version = getattr(_release, "__version__", "0.0.0")
ReleaseDate = getattr(_release, "__release_date__", "unknown")
CopyrightYear = getattr(_release, "__copyright_year__", "2024")
AppName = getattr(_release, "__app_name__", "cwkit")
App = AppName + " " + Version
Author = getattr(_release, "__author__", "The cwkit Authors")
Copyright = f"Copyright (C) {CopyrightYear} {Author}"
Freeware = (
    AppName
    + """ comes with ABSOLUTELY NO WARRANTY!
This is free software, and you are welcome to redistribute it under
certain conditions. Look at the file `COPYING' within this distribution."""
)

# environment variable overriding the depth refusal threshold
MAX_DEPTH_ENV = "CWKIT_MAX_DEPTH"

# List Python modules in the form (module, name, version attribute)
Modules = (
    ("argcomplete", "Argcomplete", None),
)


def normpath(path):
    """Norm given system path with all available norm or expand functions
    in os.path."""
    expanded = os.path.expanduser(os.path.expandvars(path))
    return os.path.normcase(os.path.normpath(expanded))


def get_modules_info():
    """Return a line listing the detected optional modules."""
    module_infos = []
    for mod, name, version_attr in Modules:
        if not fileutil.has_module(mod):
            continue
        module = sys.modules[mod]
        if version_attr and (attr := getattr(module, version_attr, None)):
            module_infos.append(f"{name} {attr}")
        else:
            module_infos.append(name)
    return "Modules: %s" % (", ".join(module_infos) or "none")


class Configuration(dict):
    """
    Storage for configuration options. Options come from defaults,
    configuration files, the environment and the command line, in
    that order of precedence.
    """

    def __init__(self):
        super().__init__()
        # limits
        self["maxdepth"] = 20
        self["qmaxdepth"] = 14
        # verification
        self["depth"] = 10
        self["threads"] = 4
        self["seed"] = 0
        self["samples"] = 200
        # output
        self["quiet"] = False
        self["status"] = True
        self["output"] = "text"
        self["fileoutput"] = []
        self["logger"] = None
        self.loggers = {}
        from ..logger import LoggerClasses

        for c in LoggerClasses:
            key = c.LoggerName
            self[key] = {}
            self.loggers[key] = c

    def logger_new(self, loggername, **kwargs):
        """Instantiate new logger and return it."""
        args = dict(self[loggername])
        args.update(kwargs)
        return self.loggers[loggername](**args)

    def read(self, files=None):
        """
        Read settings from given config files, or from the user
        configuration file if none are given.

        @raises: CWKitError on syntax errors in the config file(s)
        """
        cfiles = list(files) if files else []
        if not cfiles:
            userconf = get_user_config()
            if os.path.isfile(userconf):
                cfiles.append(userconf)
        filtered_cfiles = []
        for cfile in cfiles:
            if not fileutil.is_valid_config_source(cfile):
                log.warn(LOG_ROOT, "Configuration file %r does not exist.", cfile)
            elif not fileutil.is_readable(cfile):
                log.warn(LOG_ROOT, "Configuration file %r is not readable.", cfile)
            else:
                filtered_cfiles.append(cfile)
        log.debug(LOG_ROOT, "reading configuration from %s", filtered_cfiles)
        if filtered_cfiles:
            confparse.CWConfigParser(self).read(filtered_cfiles)

    def read_environment(self, environ=None):
        """Apply CWKIT_MAX_DEPTH; invalid values are ignored with a warning."""
        if environ is None:
            environ = os.environ
        value = environ.get(MAX_DEPTH_ENV)
        if value is None:
            return
        try:
            depth = int(value)
            if depth < 1:
                raise ValueError(value)
        except ValueError:
            log.warn(
                LOG_ROOT, "ignoring invalid %s value %r", MAX_DEPTH_ENV, value
            )
            return
        self["maxdepth"] = depth

    def sanitize(self):
        "Make sure the configuration is consistent."
        self["threads"] = max(0, self["threads"])
        if self["logger"] is None:
            self.sanitize_logger()

    def sanitize_logger(self):
        """Make logger configuration consistent."""
        if self["output"] not in self.loggers:
            log.warn(LOG_ROOT, "activating text logger output.")
            self["output"] = "text"
        self["logger"] = self.logger_new(self["output"])


def get_user_config():
    """Get the user configuration filename
    $XDG_CONFIG_HOME/cwkit/cwkitrc, with ~/.config as fallback for
    XDG_CONFIG_HOME. The file need not exist.
    """
    confdir = os.environ.get("XDG_CONFIG_HOME") or os.path.join("~", ".config")
    return normpath(os.path.join(confdir, "cwkit", "cwkitrc"))
