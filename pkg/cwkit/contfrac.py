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
Finite simple continued fractions [a0; a1, ..., ak] of positive
rationals and their correspondence with tree paths.

Canonical form has a final term of at least 2 whenever k >= 1, which
picks one of the two expansions [.., ak] = [.., ak - 1, 1].
"""

import re

from . import DomainError, log, LOG_CF
from .arith import Fraction, _as_int
from .tree import Path, LEFT, RIGHT

_cf_re = re.compile(r"\[\s*(\d+)\s*(?:;\s*(\d+(?:\s*,\s*\d+)*)\s*)?\]")


class ContinuedFraction:
    """Term list [a0; a1, ..., ak] with a0 >= 0, ai >= 1 and a
    positive value. The list need not be canonical."""

    __slots__ = ('_terms',)

    def __new__(cls, terms):
        terms = tuple(_as_int(term, "continued fraction term") for term in terms)
        if not terms:
            raise DomainError("a continued fraction needs at least one term")
        if terms[0] < 0:
            raise DomainError(f"leading term must be nonnegative, got {terms[0]}")
        for term in terms[1:]:
            if term < 1:
                raise DomainError(f"interior term must be positive, got {term}")
        if terms == (0,):
            raise DomainError("[0] is not a positive rational")
        self = super().__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def parse(cls, text):
        """Parse "[a0; a1, a2, ...]" or "[a0]".

        @raises: DomainError on syntax errors
        """
        match = _cf_re.fullmatch(text.strip())
        if not match:
            raise DomainError(f"invalid continued fraction {text!r}")
        head, tail = match.groups()
        terms = [int(head)]
        if tail:
            terms.extend(int(term) for term in tail.split(","))
        return cls(terms)

    @property
    def terms(self):
        return self._terms

    @property
    def digit_sum(self):
        return sum(self._terms)

    def is_canonical(self):
        if len(self._terms) == 1:
            return True
        return self._terms[-1] >= 2

    def canonical(self):
        """Fold a trailing 1 into its predecessor."""
        if self.is_canonical():
            return self
        return ContinuedFraction(self._terms[:-2] + (self._terms[-2] + 1,))

    def alias(self):
        """The other expansion [.., ak - 1, 1] of a canonical fraction."""
        cf = self.canonical()
        return ContinuedFraction(cf.terms[:-1] + (cf.terms[-1] - 1, 1))

    def __eq__(self, other):
        if not isinstance(other, ContinuedFraction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __repr__(self):
        return f"ContinuedFraction({list(self._terms)!r})"

    def __str__(self):
        head, tail = self._terms[0], self._terms[1:]
        if not tail:
            return f"[{head}]"
        return "[%d; %s]" % (head, ", ".join(str(term) for term in tail))


def _coerce(cf):
    if isinstance(cf, ContinuedFraction):
        return cf
    return ContinuedFraction(cf)


def to_cf(r):
    """Canonical continued fraction of r by the Euclidean algorithm."""
    num, den = r.num, r.den
    terms = []
    while den:
        q, rem = divmod(num, den)
        terms.append(q)
        num, den = den, rem
    return ContinuedFraction(terms)


def from_cf(cf):
    """Evaluate a (possibly non-canonical) continued fraction.

    @raises: DomainError on invalid terms
    """
    terms = _coerce(cf).terms
    num, den = terms[-1], 1
    for term in reversed(terms[:-1]):
        num, den = term * num + den, num
    return Fraction._reduced(num, den)


def digit_sum(cf):
    return _coerce(cf).digit_sum


def cf_to_path(cf):
    """Root-to-node path of the fraction with canonical expansion cf.

    Read from the node up, the path is R^a0 L^a1 R^a2 ... with the last
    exponent lowered by one and empty runs dropped; the root-to-node
    path is that word reversed.

    @raises: DomainError when cf is not canonical
    """
    cf = _coerce(cf)
    if not cf.is_canonical():
        raise DomainError(f"{cf} is not in canonical form")
    exponents = list(cf.terms)
    exponents[-1] -= 1
    upward = [
        (RIGHT if index % 2 == 0 else LEFT, count)
        for index, count in enumerate(exponents)
        if count
    ]
    path = Path(reversed(upward))
    log.debug(LOG_CF, "%s -> %s", cf, path)
    return path


def path_to_cf(path):
    """Canonical continued fraction of the node at path."""
    upward = list(reversed(path.runs))
    if not upward:
        return ContinuedFraction([1])
    terms = [count for _, count in upward]
    if upward[0][0] == LEFT:
        terms.insert(0, 0)
    terms[-1] += 1
    return ContinuedFraction(terms)


def _tails(total):
    """Term tuples a1..ak with ai >= 1, ak >= 2 and sum total."""
    if total >= 2:
        yield (total,)
    for first in range(1, total - 1):
        for rest in _tails(total - first):
            yield (first,) + rest


def iter_cf_with_digit_sum(s):
    """Yield every canonical continued fraction with digit sum s.

    There are 2**(s-1) of them, one for each node on level s.
    """
    s = _as_int(s, "digit sum")
    if s < 1:
        raise DomainError(f"digit sum must be positive, got {s}")
    yield ContinuedFraction([s])
    for head in range(s - 1, -1, -1):
        for tail in _tails(s - head):
            yield ContinuedFraction((head,) + tail)
