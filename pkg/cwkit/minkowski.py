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
Minkowski's question-mark function on positive rationals.

For r = [a0; a1, ..., am] the value is
a0 + 2 * sum((-1)**(n+1) / 2**(a1 + ... + an) for n = 1..m), always a
dyadic rational, so every function here is exact.
"""

import collections
import dataclasses

from . import DomainError, InternalInconsistencyError, log, LOG_QMARK
from .arith import (
    Dyadic,
    dyadic_add,
    dyadic_sub,
    dyadic_scale_pow2,
    _as_int,
)
from .contfrac import to_cf, ContinuedFraction
from .diagonals import diagonal_element, t_value
from .tree import LEFT, RIGHT, fraction_at, level_iter, level_sum

PathIdentities = collections.namedtuple(
    "PathIdentities", ["translation", "left_run", "left_right_left"]
)


def qmark_of_terms(terms):
    """Evaluate the question-mark sum over a term list, canonical or not."""
    terms = ContinuedFraction(terms).terms
    head, tail = terms[0], terms[1:]
    if not tail:
        return Dyadic(head)
    partial = []
    total = 0
    for term in tail:
        total += term
        partial.append(total)
    # scaled by 2**total: 2 * 2**-s becomes 2**(total - s + 1)
    numerator = 0
    for index, s in enumerate(partial):
        term = 1 << (total - s + 1)
        numerator += term if index % 2 == 0 else -term
    return Dyadic((head << total) + numerator, total)


def qmark(r):
    """?(r) through the canonical continued fraction of r."""
    return qmark_of_terms(to_cf(r).terms)


def qmark_children(r, x):
    """Images of the children of r from x = ?(r) alone.

    With n = floor(r): ?(right) = 1 + x and
    ?(left) = (x + 2**(n+1) - (n+2)) / 2**(n+1).

    @raises: DomainError when x is not ?(r)
    """
    if x != qmark(r):
        raise DomainError(f"{x} is not the question-mark image of {r}")
    n = r.floor()
    right = dyadic_add(x, Dyadic(1))
    shifted = dyadic_sub(dyadic_add(x, Dyadic(1 << (n + 1))), Dyadic(n + 2))
    left = dyadic_scale_pow2(shifted, -(n + 1))
    return left, right


def qmark_reciprocal(r, x):
    """?(1/r) = (2 + a0 - x) / 2**a0 for r > 1 with a0 = floor(r).

    @raises: DomainError for r <= 1 or when floor(x) differs from a0
    """
    if not r > 1:
        raise DomainError(f"reciprocal rule needs r > 1, got {r}")
    a0 = r.floor()
    if x.floor() != a0:
        raise DomainError(f"{x} is not the question-mark image of {r}")
    return dyadic_scale_pow2(dyadic_sub(Dyadic(2 + a0), x), -a0)


def qmark_path_identity_check(path, n):
    """Check the three path rules for prefix path and run length n >= 1.

    translation: ?(P R^n) = n + ?(P)
    left_run: ?(P L^(n+1)) = ?(P L) / 2**n
    left_right_left: ?(P L R^n L) = 1 - 2**-n + ?(P L) / 2**(n+1)
    """
    n = _as_int(n, "run length")
    if n < 1:
        raise DomainError(f"run length must be positive, got {n}")
    base = qmark(fraction_at(path))
    with_left = path.extend(LEFT)
    left_value = qmark(fraction_at(with_left))
    translation = qmark(fraction_at(path.extend(RIGHT, n))) == dyadic_add(
        base, Dyadic(n)
    )
    left_run = qmark(fraction_at(path.extend(LEFT, n + 1))) == dyadic_scale_pow2(
        left_value, -n
    )
    zigzag = with_left.extend(RIGHT, n).extend(LEFT)
    expected = dyadic_add(
        Dyadic((1 << n) - 1, n), dyadic_scale_pow2(left_value, -(n + 1))
    )
    left_right_left = qmark(fraction_at(zigzag)) == expected
    return PathIdentities(translation, left_run, left_right_left)


def qmark_level_sum(n):
    """Return (sum of ?(r), sum of r) over level n."""
    total = Dyadic(0)
    for r in level_iter(n):
        total = dyadic_add(total, qmark(r))
    return total, level_sum(n)


@dataclasses.dataclass(frozen=True)
class AffineDyadicMap:
    """x -> offset + x / 2**shift, applied to x = ?(1/j) = 2**(1-j)."""

    offset: Dyadic
    shift: int

    def evaluate(self, x):
        return dyadic_add(self.offset, dyadic_scale_pow2(x, -self.shift))

    def at(self, j):
        """Value for column j >= 1."""
        j = _as_int(j, "column")
        if j < 1:
            raise DomainError(f"columns start at j = 1, got {j}")
        return self.evaluate(Dyadic(1, j - 1))

    def __str__(self):
        term = "x" if self.shift == 0 else f"x/{1 << self.shift}"
        if self.offset == 0:
            return term
        return f"{self.offset}+{term}"


def qmark_diagonal_map(i, verify_upto=8):
    """Affine map sending ?(1/j) to ?(element j of L_i).

    Solved from columns 2 and 3, then checked on columns 1..verify_upto.
    L_1 gives the identity x.

    @raises: InternalInconsistencyError if the solved map fails a check
    """
    i = _as_int(i, "diagonal index")
    v2 = qmark(diagonal_element(i, 2))
    v3 = qmark(diagonal_element(i, 3))
    try:
        step = dyadic_sub(v2, v3)
        # step = 2**(-2-k)
        k = -step.log2() - 2
    except DomainError as msg:
        raise InternalInconsistencyError(
            f"?(L_{i}) is not affine in 2**(1-j): {msg}"
        ) from None
    if k < 0:
        raise InternalInconsistencyError(f"?(L_{i}) has a negative shift {k}")
    offset = dyadic_sub(v2, Dyadic(1, k + 1))
    result = AffineDyadicMap(offset, k)
    for j in range(1, max(verify_upto, 3) + 1):
        expected = qmark(diagonal_element(i, j))
        if result.at(j) != expected:
            raise InternalInconsistencyError(
                f"map {result} of L_{i} gives {result.at(j)} at j={j}, "
                f"direct evaluation gives {expected}"
            )
    log.debug(LOG_QMARK, "?(L_%d) = %s", i, result)
    return result


@dataclasses.dataclass(frozen=True)
class ClosedFormulaDiagnostic:
    """Comparison of the solved map of L_index with the closed formula
    ?(t_(i-1)) + x * 2**(floor(t_(i-1)) - floor(log2(i-1)))."""

    index: int
    observed: AffineDyadicMap
    predicted_offset: Dyadic
    predicted_exponent: int

    @property
    def observed_exponent(self):
        return -self.observed.shift

    @property
    def offset_matches(self):
        return self.predicted_offset == self.observed.offset

    @property
    def exponent_matches(self):
        return self.predicted_exponent == self.observed_exponent

    @property
    def consistent(self):
        """Whether some integer exponent reconciles formula and map."""
        return self.offset_matches


def closed_formula_diagnostic(i):
    """Diagnose the closed formula for ?(L_i), i >= 2."""
    i = _as_int(i, "diagonal index")
    if i < 2:
        raise DomainError(f"closed formula needs i >= 2, got {i}")
    t = t_value(i - 1)
    return ClosedFormulaDiagnostic(
        index=i,
        observed=qmark_diagonal_map(i),
        predicted_offset=qmark(t),
        predicted_exponent=t.floor() - ((i - 1).bit_length() - 1),
    )
