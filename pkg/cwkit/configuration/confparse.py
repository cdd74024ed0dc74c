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
"""Parse configuration files"""

from configparser import RawConfigParser

from .. import CWKitError, LOG_ROOT, log, logconf


class CWConfigParser(RawConfigParser):
    """
    Parse a cwkit configuration file.
    """

    def __init__(self, config):
        super().__init__()
        self.config = config

    def read(self, files):
        """Read settings from given config files.

        @raises: CWKitError on syntax errors in the config file(s)
        """
        assert isinstance(files, list), "Invalid file list %r" % files
        try:
            self.read_ok = super().read(files)
            if not self.sections():
                raise CWKitError("configuration files %s contain no sections." % files)
            if len(self.read_ok) < len(files):
                failed_files = set(files) - set(self.read_ok)
                log.warn(
                    LOG_ROOT, "Could not read configuration files %s.", failed_files
                )
            self.read_limits_config()
            self.read_verify_config()
            self.read_output_config()
        except CWKitError:
            raise
        except Exception as msg:
            raise CWKitError("Error parsing configuration: %s" % str(msg))

    def read_boolean_option(self, section, option):
        """Read a boolean option."""
        if self.has_option(section, option):
            self.config[option] = self.getboolean(section, option)

    def read_int_option(self, section, option, key=None, min=None, max=None):
        """Read an integer option."""
        if self.has_option(section, option):
            num = self.getint(section, option)
            if min is not None and num < min:
                raise CWKitError(
                    "invalid value for %s: %d must not be less than %d"
                    % (option, num, min)
                )
            if max is not None and num > max:
                raise CWKitError(
                    "invalid value for %s: %d must not be greater than %d"
                    % (option, num, max)
                )
            if key is None:
                key = option
            self.config[key] = num

    def read_limits_config(self):
        """Read configuration options in section "limits"."""
        section = "limits"
        self.read_int_option(section, "maxdepth", min=1)
        self.read_int_option(section, "qmaxdepth", min=1)

    def read_verify_config(self):
        """Read configuration options in section "verify"."""
        section = "verify"
        self.read_int_option(section, "depth", min=2)
        self.read_int_option(section, "threads", min=-1)
        self.read_int_option(section, "seed")
        self.read_int_option(section, "samples", min=1)

    def read_output_config(self):
        """Read configuration options in section "output"."""
        section = "output"
        from ..logger import LoggerClasses, LoggerNames

        for c in LoggerClasses:
            key = c.LoggerName
            if self.has_section(key):
                for opt in self.options(key):
                    self.config[key][opt] = self.get(key, opt)
                if self.has_option(key, 'parts'):
                    val = self.get(key, 'parts')
                    parts = [f.strip().lower() for f in val.split(',')]
                    self.config[key]['parts'] = parts
        if self.has_option(section, "quiet"):
            if self.getboolean(section, "quiet"):
                self.config['quiet'] = True
                self.config['status'] = False
                logconf.reset_loglevel()
        if self.has_option(section, "debug"):
            val = self.get(section, "debug")
            parts = [f.strip().lower() for f in val.split(',')]
            logconf.set_debug(parts)
        self.read_boolean_option(section, "status")
        if self.has_option(section, "log"):
            val = self.get(section, "log").strip().lower()
            if val not in LoggerNames:
                raise CWKitError(f"unknown output type {val!r}")
            self.config['output'] = val
        if self.has_option(section, "fileoutput"):
            loggers = (x.strip().lower() for x in self.get(section, "fileoutput").split(","))
            for val in loggers:
                if val in LoggerNames:
                    output = self.config.logger_new(val, fileoutput=1)
                    self.config['fileoutput'].append(output)
