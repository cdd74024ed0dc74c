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
Verification worker threads.
"""
import queue

from . import task
from .. import log, LOG_THREAD

# Interval in which each worker looks if it's stopped.
QUEUE_POLL_INTERVALL_SECS = 0.5


def check_queue(checkqueue, results, scale):
    """Run all queued checks without threading."""
    while True:
        try:
            index, checkclass = checkqueue.get_nowait()
        except queue.Empty:
            break
        try:
            results[index] = checkclass(scale).run()
        finally:
            checkqueue.task_done()


class Checker(task.CheckedTask):
    """Worker running checks from a queue. Results are stored by their
    queue index so merge order does not depend on thread timing."""

    def __init__(self, checkqueue, results, scale, name=None):
        super().__init__(name=name)
        self.checkqueue = checkqueue
        self.results = results
        self.scale = scale
        self.origname = self.name

    def run_checked(self):
        """Run checks until the queue is drained or the thread is stopped."""
        while not self.stopped(0):
            try:
                index, checkclass = self.checkqueue.get(
                    timeout=QUEUE_POLL_INTERVALL_SECS
                )
            except queue.Empty:
                break
            try:
                self.name = f"{self.origname}-{checkclass.Name}"
                log.debug(LOG_THREAD, "%s started", self.name)
                self.results[index] = checkclass(self.scale).run()
            finally:
                self.checkqueue.task_done()
                self.name = self.origname
