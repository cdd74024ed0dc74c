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
Running verification checks with several threads, and writing node
output to the configured loggers.
"""
import os
import queue
import time

from .. import log, LOG_VERIFY, LOG_ROOT, ResourceLimitError
from ..checks import VerifyReport, VerifyScale
from . import checker, console

# seconds between progress lines
STATUS_WAIT_SECONDS = 5


def get_scale(config, depth):
    """VerifyScale for depth under the configured limits.

    @raises: ResourceLimitError when depth exceeds the maximum depth
    """
    check_depth(config, "verification depth", depth)
    if depth > config["qmaxdepth"]:
        log.info(
            LOG_VERIFY,
            "question-mark node checks are clamped to depth %d",
            config["qmaxdepth"],
        )
    return VerifyScale(
        depth,
        qdepth=config["qmaxdepth"],
        samples=config["samples"],
        seed=config["seed"],
    )


def check_depth(config, what, value, limit=None):
    """@raises: ResourceLimitError when value exceeds the limit"""
    if limit is None:
        limit = config["maxdepth"]
    if value > limit:
        raise ResourceLimitError(what, value, limit)


def run_checks(config, checkclasses, scale):
    """Run the given checks and merge their results in the given order.

    @return: VerifyReport
    """
    checkqueue = queue.Queue()
    for index, checkclass in enumerate(checkclasses):
        checkqueue.put((index, checkclass))
    results = [None] * len(checkclasses)
    status = console.StatusLogger() if config["status"] else None
    start = time.time()
    threads = []
    try:
        if config["threads"] <= 0:
            checker.check_queue(checkqueue, results, scale)
        else:
            threads = start_threads(config, checkqueue, results, scale)
            wait_for_threads(threads, results, status, start)
    except KeyboardInterrupt:
        interrupt(threads)
        raise
    except RuntimeError:
        log.warn(
            LOG_ROOT,
            "Could not start a new thread. Check that the current user"
            " is allowed to start new threads.",
        )
        abort(threads)
        checker.check_queue(checkqueue, results, scale)
    log.debug(LOG_VERIFY, "%d checks in %.2f seconds", len(results), time.time() - start)
    return VerifyReport(scale.depth, [result for result in results if result])


def start_threads(config, checkqueue, results, scale):
    num = min(config["threads"], checkqueue.qsize()) or 1
    threads = []
    for i in range(num):
        t = checker.Checker(checkqueue, results, scale, name=f"CheckThread-{i}")
        t.start()
        threads.append(t)
    return threads


def wait_for_threads(threads, results, status, start):
    """Join the workers, writing a progress line now and then."""
    while any(t.is_alive() for t in threads):
        for t in threads:
            t.join(timeout=STATUS_WAIT_SECONDS / len(threads))
        if status is not None:
            done = sum(1 for result in results if result is not None)
            status.log_status(done, len(results), time.time() - start)


def interrupt(threads):
    """Stop the workers, ignoring any subsequent interrupts."""
    while True:
        try:
            log.warn(LOG_ROOT, "interrupt; waiting for active threads to finish")
            log.warn(LOG_ROOT, "another interrupt will exit immediately")
            abort(threads)
            break
        except KeyboardInterrupt:
            pass


def abort(threads):
    """Signal all workers to stop and wait for them."""
    for t in threads:
        t.stop()
    try:
        for t in threads:
            t.join()
    except KeyboardInterrupt:
        log.warn(LOG_ROOT, "user abort; force shutdown")
        abort_now()


def abort_now():
    """Force exit of current process without cleanup."""
    os._exit(3)


def write_nodes(config, nodes):
    """Write nodes to the main logger and every file output."""
    loggers = [config["logger"]] + list(config["fileoutput"])
    for logger in loggers:
        logger.start_output()
    try:
        for node in nodes:
            for logger in loggers:
                logger.log_filter_node(node)
    finally:
        for logger in loggers:
            logger.end_output()
