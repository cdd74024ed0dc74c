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
The query language of the command line client.

    path p/q | at PATH | cf p/q | eval [a0; a1, ...] | qmark p/q |
    diag n [j] | rank p/q | unrank k | member p/q n | parent p/q |
    children p/q | level p/q | stern m | limit n | qmap i | qformula i

Each query yields its answer lines plus notices about auto-reduced input.
"""

import dataclasses

from . import CWKitError, log, LOG_CMDLINE
from .arith import parse_fraction
from .contfrac import ContinuedFraction, from_cf, to_cf
from .diagonals import diagonal, limit_value, solve_membership, stern
from .minkowski import closed_formula_diagnostic, qmark, qmark_diagonal_map
from .tree import (
    Path,
    address_of,
    children,
    fraction_at,
    parent,
    path_of,
    rank_of,
    unrank,
)


class QuerySyntaxError(CWKitError):
    """A query does not match the grammar."""

    pass


@dataclasses.dataclass
class QueryAnswer:
    lines: list
    notices: list = dataclasses.field(default_factory=list)


class _Query:
    """Argument reader for one query, collecting notices."""

    def __init__(self, words):
        self.words = words
        self.notices = []

    def fraction(self, index):
        token = self.token(index)
        try:
            value, reduced = parse_fraction(token)
        except CWKitError as msg:
            raise QuerySyntaxError(f"invalid fraction {token!r}: {msg}") from None
        if reduced:
            self.notices.append(f"{token} reduced to {value}")
        return value

    def integer(self, index, minimum=1):
        token = self.token(index)
        try:
            value = int(token)
        except ValueError:
            raise QuerySyntaxError(f"invalid integer {token!r}") from None
        if value < minimum:
            raise QuerySyntaxError(f"{token!r} must be at least {minimum}")
        return value

    def token(self, index):
        try:
            return self.words[index]
        except IndexError:
            raise QuerySyntaxError(
                f"missing argument {index} for {self.words[0]!r}"
            ) from None

    def rest(self, index):
        if len(self.words) <= index:
            self.token(index)
        return " ".join(self.words[index:])

    def arity(self, *counts):
        given = len(self.words) - 1
        if given in counts:
            return
        if given > max(counts):
            raise QuerySyntaxError(
                f"unexpected token {self.words[max(counts) + 1]!r}"
            )
        self.token(given + 1)


def _path(q):
    q.arity(1)
    return [str(path_of(q.fraction(1)))]


def _at(q):
    try:
        path = Path.parse(q.rest(1))
    except CWKitError as msg:
        raise QuerySyntaxError(str(msg)) from None
    return [str(fraction_at(path))]


def _cf(q):
    q.arity(1)
    return [str(to_cf(q.fraction(1)))]


def _eval(q):
    try:
        cf = ContinuedFraction.parse(q.rest(1))
    except CWKitError as msg:
        raise QuerySyntaxError(str(msg)) from None
    return [str(from_cf(cf))]


def _qmark(q):
    q.arity(1)
    return [str(qmark(q.fraction(1)))]


def _diag(q):
    q.arity(1, 2)
    diag = diagonal(q.integer(1))
    if len(q.words) == 3:
        return [str(diag.element(q.integer(2)))]
    return [str(diag)]


def _rank(q):
    q.arity(1)
    return [str(rank_of(q.fraction(1)))]


def _unrank(q):
    q.arity(1)
    return [str(unrank(q.integer(1)))]


def _member(q):
    q.arity(2)
    j = solve_membership(q.fraction(1), q.integer(2))
    return ["none" if j is None else str(j)]


def _parent(q):
    q.arity(1)
    return [str(parent(q.fraction(1)))]


def _children(q):
    q.arity(1)
    return [" ".join(str(child) for child in children(q.fraction(1)))]


def _level(q):
    q.arity(1)
    address = address_of(q.fraction(1))
    return [f"level {address.level} position {address.position}"]


def _stern(q):
    q.arity(1)
    return [str(stern(q.integer(1, minimum=0)))]


def _limit(q):
    q.arity(1)
    return [str(limit_value(q.integer(1)))]


def _qmap(q):
    q.arity(1)
    return [str(qmark_diagonal_map(q.integer(1)))]


def _qformula(q):
    q.arity(1)
    diag = closed_formula_diagnostic(q.integer(1, minimum=2))
    return [
        f"observed {diag.observed}",
        f"predicted offset {diag.predicted_offset}, "
        f"exponent {diag.predicted_exponent}",
        "offset %s, exponent %s (observed %d)"
        % (
            "agrees" if diag.offset_matches else "differs",
            "agrees" if diag.exponent_matches else "differs",
            diag.observed_exponent,
        ),
    ]


Commands = {
    "path": _path,
    "at": _at,
    "cf": _cf,
    "eval": _eval,
    "qmark": _qmark,
    "diag": _diag,
    "rank": _rank,
    "unrank": _unrank,
    "member": _member,
    "parent": _parent,
    "children": _children,
    "level": _level,
    "stern": _stern,
    "limit": _limit,
    "qmap": _qmap,
    "qformula": _qformula,
}


def run_query(text):
    """Answer one query.

    @raises: QuerySyntaxError naming the offending token, DomainError
        for arguments outside an operation's domain
    """
    words = text.split()
    if not words:
        raise QuerySyntaxError("empty query")
    try:
        handler = Commands[words[0].lower()]
    except KeyError:
        raise QuerySyntaxError(
            f"unknown query {words[0]!r}; known queries: {', '.join(Commands)}"
        ) from None
    q = _Query(words)
    lines = handler(q)
    log.debug(LOG_CMDLINE, "query %r -> %s", text, lines)
    return QueryAnswer(lines, q.notices)
