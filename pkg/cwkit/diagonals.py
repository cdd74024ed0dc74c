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
Left and right diagonals of the Calkin-Wilf tree.

Writing the first levels as rows of a matrix, column n read downwards
is the left diagonal L_n. Every L_n is an affine family
j -> (a*j + b)/(c*j + d) for j = 1, 2, ...; L_1 = 1/j and L_2 = (j+1)/j
seed a binary recurrence. The coefficients and constants of each
diagonal are consecutive Stern numbers.
"""

import dataclasses
import fractions
from typing import Optional

from . import DomainError, log, LOG_DIAGONAL
from .arith import Fraction, _as_int
from .decorators import synchronized
from .lock import get_lock
from .tree import NodeAddress, fraction_at_address, address_of, successor

LEFT_SIDE = "L"
RIGHT_SIDE = "R"


def _affine(coefficient, constant):
    """Render coefficient*j + constant the short way: "3j+2", "j", "1"."""
    parts = []
    if coefficient:
        parts.append("j" if coefficient == 1 else f"{coefficient}j")
    if constant or not parts:
        parts.append(str(constant))
    return "+".join(parts)


def _label(top, bottom):
    def wrap(text):
        return f"({text})" if "+" in text else text

    return f"{wrap(top)}/{wrap(bottom)}"


@dataclasses.dataclass(frozen=True)
class Diagonal:
    """The family j -> (a*j + b)/(c*j + d) of diagonal index on side."""

    index: int
    a: int
    b: int
    c: int
    d: int
    side: str = LEFT_SIDE

    @property
    def determinant(self):
        return self.a * self.d - self.b * self.c

    @property
    def coefficients(self):
        """Pair (a, c)."""
        return self.a, self.c

    @property
    def constants(self):
        """Pair (b, d)."""
        return self.b, self.d

    def element(self, j):
        """Member j >= 1 of the family."""
        j = _as_int(j, "column")
        if j < 1:
            raise DomainError(f"diagonal elements start at j = 1, got {j}")
        return Fraction(self.a * j + self.b, self.c * j + self.d)

    def __str__(self):
        return _label(_affine(self.a, self.b), _affine(self.c, self.d))


_SEEDS = {
    1: (0, 1, 1, 0),
    2: (1, 1, 1, 0),
}


def _child(quad, n):
    """Recurrence step from L_m to L_n with m = (n + 1) // 2."""
    a, b, c, d = quad
    if n % 2:
        return a, b, a + c, b + d
    return a + c, b + d, c, d


def diagonal(n):
    """Return the left diagonal L_n.

    @raises: DomainError for n < 1
    """
    n = _as_int(n, "diagonal index")
    if n < 1:
        raise DomainError(f"diagonal index must be positive, got {n}")
    chain = []
    m = n
    while m not in _SEEDS:
        chain.append(m)
        m = (m + 1) // 2
    quad = _SEEDS[m]
    for index in reversed(chain):
        quad = _child(quad, index)
    return Diagonal(n, *quad)


def iter_diagonals(limit):
    """Yield L_1 .. L_limit, each built from its stored parent."""
    quads = [None]
    for n in range(1, limit + 1):
        if n in _SEEDS:
            quad = _SEEDS[n]
        else:
            quad = _child(quads[(n + 1) // 2], n)
        quads.append(quad)
        yield Diagonal(n, *quad)


def right_diagonal(n):
    """The right diagonal R_n, the reciprocal family of L_n."""
    left = diagonal(n)
    return Diagonal(n, left.c, left.d, left.a, left.b, side=RIGHT_SIDE)


def diagonal_element(n, j):
    """Element j of L_n."""
    return diagonal(n).element(j)


def right_diagonal_element(n, j):
    """Element j of R_n, the reciprocal of element j of L_n."""
    return diagonal_element(n, j).reciprocal()


def ceil_log2(n):
    return (n - 1).bit_length()


def column_address(n, j):
    """Tree address holding element j of L_n."""
    return NodeAddress(ceil_log2(n) + j, n)


def column_oracle(n, j):
    """Element j of L_n read straight from the tree."""
    return fraction_at_address(column_address(n, j))


class SternSequence:
    """Numerators b_0, b_1, ... of the tree fractions in breadth-first order.

    Values are appended by stepping through the tree with the successor
    rule; extension runs under a lock so concurrent readers share one
    cache.
    """

    _lock = get_lock("stern", debug=True)

    def __init__(self):
        self.cache = [1]
        self._last = Fraction(1, 1)

    def __len__(self):
        return len(self.cache)

    @synchronized(_lock)
    def _extend(self, upto):
        current = self._last
        while len(self.cache) <= upto:
            current = successor(current)
            self.cache.append(current.num)
        self._last = current
        log.debug(LOG_DIAGONAL, "stern cache extended to %d values", len(self.cache))

    def __getitem__(self, m):
        m = _as_int(m, "stern index")
        if m < 0:
            raise DomainError(f"stern index must be nonnegative, got {m}")
        if m >= len(self.cache):
            self._extend(m)
        return self.cache[m]


_stern = SternSequence()


def stern(m):
    """Return b_m, the numerator of the fraction with rank m + 1."""
    return _stern[m]


def diatomic(m):
    """Stern's diatomic s(m) from the binary digits of m.

    s(2m) = s(m) and s(2m+1) = s(m) + s(m+1); b_m equals s(m + 1).
    """
    m = _as_int(m, "diatomic index")
    if m < 0:
        raise DomainError(f"diatomic index must be nonnegative, got {m}")
    a, b = 1, 0
    while m:
        if m & 1:
            b += a
        else:
            a += b
        m >>= 1
    return b


def t_value(m):
    """t_m = b_(m-1)/b_m for m >= 1."""
    m = _as_int(m, "index")
    if m < 1:
        raise DomainError(f"t index must be positive, got {m}")
    return Fraction(stern(m - 1), stern(m))


def coefficient_ratio(n):
    """Pair (a, c) of L_(n+1), unreduced; equal to (b_(n-1), b_n)."""
    n = _as_int(n, "index")
    if n < 1:
        raise DomainError(f"index must be positive, got {n}")
    return diagonal(n + 1).coefficients


def constant_index(n):
    """Index m with constants (b, d) of L_(n+1) equal to (b_(m-1), b_m).

    With p = floor(log2 n), k is the largest x for which
    n - sum(2**(p - i) for i <= x) stays nonnegative, and
    m = n + 2**(p-k-1) - sum(2**(p - i) for i <= k).

    @raises: DomainError for n < 2 and for n = 2**q - 1, whose
        successor diagonals carry the constants (1, 0) outside the
        Stern pattern
    """
    n = _as_int(n, "index")
    if n < 2:
        raise DomainError(f"constant index needs n >= 2, got {n}")
    p = n.bit_length() - 1
    partial = 0
    k = -1
    for x in range(p + 1):
        if n - (partial + (1 << (p - x))) < 0:
            break
        partial += 1 << (p - x)
        k = x
    if p - k - 1 < 0:
        raise DomainError(
            f"n = {n} is one less than a power of two; L_{n + 1} has constants (1, 0)"
        )
    return n + (1 << (p - k - 1)) - partial


def solve_membership(r, n):
    """Return j >= 1 with element j of L_n equal to r, or None."""
    a, b, c, d = dataclasses.astuple(diagonal(n))[1:5]
    p, q = r.num, r.den
    denominator = q * a - p * c
    if denominator == 0:
        return None
    numerator = p * d - q * b
    j, rest = divmod(numerator, denominator)
    if rest or j < 1:
        return None
    return j


def diagonal_limit(n):
    """Limit a/c = b_(n-2)/b_(n-1) of L_n for n >= 2.

    @raises: DomainError for n = 1, whose limit is 0
    """
    n = _as_int(n, "diagonal index")
    if n == 1:
        raise DomainError("L_1 = 1/j converges to 0, which is not a positive fraction")
    if n < 1:
        raise DomainError(f"diagonal index must be positive, got {n}")
    a, c = diagonal(n).coefficients
    return Fraction(a, c)


def limit_value(n):
    """Limit of L_n as a fractions.Fraction, including 0 for L_1."""
    if n == 1:
        return fractions.Fraction(0)
    return diagonal_limit(n).as_rational()


@dataclasses.dataclass(frozen=True)
class CoverageWitness:
    """r equals element j of L_index, index = 2**n * i - 2**(n-1)."""

    index: int
    i: int
    j: int


def coverage_witness(r, n) -> Optional[CoverageWitness]:
    """Locate r in (n-1, n] inside the family L_(2**n * i - 2**(n-1)).

    The diagonal holding r is the one numbered by its position on its
    level. Returns None if that diagonal is outside the family.

    @raises: DomainError when r is not in (n-1, n]
    """
    n = _as_int(n, "interval")
    if n < 1 or not n - 1 < r <= n:
        raise DomainError(f"{r} is not in ({n - 1}, {n}]")
    address = address_of(r)
    index = address.position
    j = address.level - ceil_log2(index)
    i, rest = divmod(index + (1 << (n - 1)), 1 << n)
    if rest or i < 1:
        return None
    return CoverageWitness(index, i, j)


def coefficient_pair(n):
    """(a, c) of L_n."""
    return diagonal(n).coefficients


def constant_pair(n):
    """(b, d) of L_n."""
    return diagonal(n).constants
