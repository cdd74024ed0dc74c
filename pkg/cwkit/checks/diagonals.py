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
Identities of the diagonal families L_n.
"""

import math

from . import _Check
from ..arith import Fraction
from ..tree import address_of
from ..diagonals import (
    coefficient_ratio,
    column_oracle,
    constant_index,
    constant_pair,
    coverage_witness,
    diagonal,
    diagonal_element,
    diagonal_limit,
    diatomic,
    iter_diagonals,
    limit_value,
    solve_membership,
    stern,
)


class DeterminantCheck(_Check):
    Name = "diagonal-determinant"
    Group = "diagonals"
    Anchor = "every diagonal (aj+b)/(cj+d) has ad - bc = -1"

    def check(self, result):
        for diag in iter_diagonals(self.scale.determinant_bound):
            result.record(
                diag.determinant == -1, "L_%s = %s", diag.index, diag
            )


class ColumnOracleCheck(_Check):
    Name = "diagonal-column-oracle"
    Group = "diagonals"
    Anchor = (
        "element j of L_n sits at level ceil(log2 n) + j, position n of the tree"
    )

    def check(self, result):
        for diag in iter_diagonals(self.scale.diagonal_bound):
            for j in range(1, self.scale.column_bound + 1):
                value = diag.element(j)
                oracle = column_oracle(diag.index, j)
                result.record(
                    value == oracle,
                    "L_%s at j=%s: %s, tree holds %s",
                    diag.index,
                    j,
                    value,
                    oracle,
                )


class CoefficientCheck(_Check):
    Name = "diagonal-coefficients"
    Group = "diagonals"
    Anchor = "the coefficients (a, c) of L_(n+1) are (b_(n-1), b_n)"

    def check(self, result):
        for n in range(1, self.scale.diagonal_bound):
            pair = coefficient_ratio(n)
            expected = (stern(n - 1), stern(n))
            result.record(pair == expected, "L_%s has %s", n + 1, pair)


class ConstantCheck(_Check):
    Name = "diagonal-constants"
    Group = "diagonals"
    Anchor = (
        "the constants (b, d) of L_(n+1) are (b_(m-1), b_m) for the index m "
        "derived from the binary expansion of n, and (1, 0) below 2**q"
    )

    def check(self, result):
        for n in range(2, self.scale.diagonal_bound):
            pair = constant_pair(n + 1)
            if (n + 1) & n == 0:
                result.record(pair == (1, 0), "L_%s has %s", n + 1, pair)
                continue
            m = constant_index(n)
            expected = (stern(m - 1), stern(m))
            result.record(
                pair == expected, "L_%s has %s, m = %s", n + 1, pair, m
            )


class CoverageCheck(_Check):
    Name = "diagonal-coverage"
    Group = "diagonals"
    Anchor = (
        "every rational in (n-1, n] lies on a diagonal L_(2**n i - 2**(n-1))"
    )

    def check(self, result):
        max_den = self.scale.coverage_denominator
        for n in (1, 2, 3):
            for q in range(1, max_den + 1):
                for p in range((n - 1) * q + 1, n * q + 1):
                    if math.gcd(p, q) != 1:
                        continue
                    r = Fraction(p, q)
                    witness = coverage_witness(r, n)
                    level = address_of(r).level
                    # position <= 2**(level-1) bounds i
                    i_bound = ((1 << (level - 1)) + (1 << (n - 1))) >> n
                    ok = (
                        witness is not None
                        and 1 <= witness.i <= i_bound
                        and solve_membership(r, witness.index) == witness.j
                    )
                    result.record(ok, "%s in (%s, %s]: %s", r, n - 1, n, witness)


class LimitCheck(_Check):
    Name = "diagonal-limit"
    Group = "diagonals"
    Anchor = "L_n converges to a/c = b_(n-2)/b_(n-1) for n >= 2"

    def check(self, result):
        for n in range(2, self.scale.diagonal_bound + 1):
            limit = diagonal_limit(n)
            expected = Fraction(stern(n - 2), stern(n - 1))
            result.record(limit == expected, "L_%s tends to %s", n, limit)


class MonotoneLimitCheck(_Check):
    Name = "diagonal-monotone-limit"
    Group = "diagonals"
    Anchor = "the distance from element j of L_n to the limit decreases strictly in j"

    def check(self, result):
        for n in range(1, self.scale.monotone_bound + 1):
            limit = limit_value(n)
            diag = diagonal(n)
            last = None
            for j in range(1, self.scale.monotone_columns + 1):
                distance = abs(diag.element(j).as_rational() - limit)
                if last is not None:
                    result.record(
                        distance < last, "L_%s at j=%s: %s", n, j, distance
                    )
                last = distance


class DistinctLimitCheck(_Check):
    Name = "diagonal-limit-distinct"
    Group = "diagonals"
    Anchor = "distinct diagonals have distinct limits"

    def check(self, result):
        seen = {}
        for n in range(1, self.scale.diagonal_bound + 1):
            limit = limit_value(n)
            other = seen.setdefault(limit, n)
            result.record(
                other == n, "L_%s and L_%s both tend to %s", other, n, limit
            )
        result.observe(diagonals=len(seen))


class DiatomicCheck(_Check):
    Name = "stern-diatomic"
    Group = "diagonals"
    Anchor = "the numerators b_m in breadth-first order are Stern's diatomic s(m+1)"

    def check(self, result):
        for m in range(self.scale.diagonal_bound):
            result.record(
                stern(m) == diatomic(m + 1), "b_%s = %s", m, stern(m)
            )


class ElementCheck(_Check):
    Name = "diagonal-membership"
    Group = "diagonals"
    Anchor = "solving (aj+b)/(cj+d) = r finds exactly the column of r"

    def check(self, result):
        for n in range(1, self.scale.diagonal_bound + 1):
            for j in range(1, self.scale.column_bound + 1):
                r = diagonal_element(n, j)
                found = solve_membership(r, n)
                result.record(found == j, "%s on L_%s found at %s", r, n, found)
