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
Worker threads of a verification run.
"""
import _thread
import threading

from ..decorators import notimplemented
from .. import log, LOG_THREAD
from . import console


class CheckedTask(threading.Thread):
    """Daemon worker that is asked to stop between checks. A crash of
    the worker itself is reported on the console; an interrupt is
    passed on to the main thread."""

    def __init__(self, name=None):
        super().__init__(name=name, daemon=True)
        self._stop_requested = threading.Event()

    def stop(self):
        """Ask the worker to finish after its current check."""
        self._stop_requested.set()

    def stopped(self, timeout=None):
        """Wait up to timeout seconds for a stop request."""
        return self._stop_requested.wait(timeout)

    def run(self):
        try:
            self.run_checked()
        except KeyboardInterrupt:
            _thread.interrupt_main()
        except Exception:
            log.debug(LOG_THREAD, "worker %s crashed", self.name)
            console.internal_error()

    @notimplemented
    def run_checked(self):
        """Work loop of the subclass."""
        pass
