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
Small function decorators.

Example::

    @synchronized(lock.get_lock("cache"))
    def extend(upto):
        "runs with the lock held"
"""
import functools


def synchronize(lock, func):
    """Return func wrapped to run with lock held."""

    @functools.wraps(func)
    def newfunc(*args, **kwargs):
        with lock:
            return func(*args, **kwargs)

    return newfunc


def synchronized(lock):
    """A decorator calling a function with acquired lock."""
    return lambda func: synchronize(lock, func)


def notimplemented(func):
    """Raises a NotImplementedError if the function is called."""

    @functools.wraps(func)
    def newfunc(*args, **kwargs):
        co = func.__code__
        attrs = (co.co_name, co.co_filename, co.co_firstlineno)
        raise NotImplementedError("function %s at %s:%d is not implemented" % attrs)

    return newfunc
