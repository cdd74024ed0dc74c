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
Identities of the tree levels.
"""

import math

from . import _Check, cached_level_stats
from ..arith import Fraction
from ..contfrac import from_cf, iter_cf_with_digit_sum
from ..tree import (
    NodeAddress,
    children,
    complexity_product,
    fraction_at,
    fraction_at_address,
    is_perfect_square,
    level_iter,
    level_size,
    parent,
    path_of,
    path_of_rank,
    rank_of,
    rank_of_path,
    trace_square_sum,
    unrank,
)


class ReducedCheck(_Check):
    Name = "reduced"
    Group = "tree"
    Anchor = "every fraction on the tree is in lowest terms"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                result.record(math.gcd(r.num, r.den) == 1, "%s on level %s", r, n)


class UniquenessCheck(_Check):
    Name = "uniqueness"
    Group = "tree"
    Anchor = (
        "levels 1..n hold pairwise distinct fractions, exactly the reduced "
        "p/q whose continued fraction digit sum is at most n"
    )

    def check(self, result):
        seen = set()
        expected = set()
        for n in self.scale.node_levels:
            for r in level_iter(n):
                key = (r.num, r.den)
                result.record(key not in seen, "%s appears twice", r)
                seen.add(key)
            for cf in iter_cf_with_digit_sum(n):
                value = from_cf(cf)
                expected.add((value.num, value.den))
            missing = expected - seen
            result.record(
                not missing and len(seen) == len(expected),
                "levels 1..%s miss %s",
                n,
                min(missing, default=None),
            )


def children_stream(n):
    """Level n rebuilt as the children of level n - 1, left to right."""
    if n == 1:
        yield Fraction(1, 1)
        return
    for r in level_iter(n - 1):
        yield from children(r)


class ConsecutiveDenominatorCheck(_Check):
    Name = "consecutive-denominators"
    Group = "tree"
    Anchor = "the denominator of each level entry is the numerator of the next"

    def check(self, result):
        for n in self.scale.levels:
            previous = None
            for r, expected in zip(level_iter(n), children_stream(n)):
                result.record(
                    r == expected, "level %s streams %s, children give %s",
                    n, r, expected,
                )
                if previous is not None:
                    result.record(
                        previous.den == expected.num,
                        "%s followed by %s", previous, expected,
                    )
                previous = expected


class ReciprocalSymmetryCheck(_Check):
    Name = "reciprocal-symmetry"
    Group = "tree"
    Anchor = "entry j of level n is the reciprocal of entry 2**(n-1)+1-j"

    def check(self, result):
        for n in self.scale.node_levels:
            size = level_size(n)
            for j, r in enumerate(level_iter(n), start=1):
                if 2 * j > size + 1:
                    break
                mirror = fraction_at_address(NodeAddress(n, size + 1 - j))
                result.record(
                    mirror == r.reciprocal(),
                    "level %s: %s and its mirror %s",
                    n,
                    r,
                    mirror,
                )


class ChildProductCheck(_Check):
    Name = "child-product"
    Group = "tree"
    Anchor = "every node is the product of its two children"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                left, right = children(r)
                result.record(left * right == r, "%s != %s * %s", r, left, right)


class LevelProductCheck(_Check):
    Name = "level-product"
    Group = "tree"
    Anchor = "the product of the fractions on each level is 1"

    def check(self, result):
        for n in self.scale.levels:
            product = cached_level_stats(n).product
            result.record(product == 1, "level %s product %s", n, product)


class SimplicitySumCheck(_Check):
    Name = "simplicity-sum"
    Group = "tree"
    Anchor = "the sum of 1/(ab) over the fractions a/b of each level is 1"

    def check(self, result):
        for n in self.scale.levels:
            total = cached_level_stats(n).simplicity_sum
            result.record(total == 1, "level %s simplicity sum %s", n, total)


class ComplexitySquareCheck(_Check):
    Name = "complexity-square"
    Group = "tree"
    Anchor = "the product of ab over the fractions a/b of a level is a perfect square"

    def check(self, result):
        for n in self.scale.square_levels:
            value = complexity_product(n)
            result.record(
                is_perfect_square(value), "level %s product of ab = %s", n, value
            )


class TraceSumCheck(_Check):
    Name = "trace-sum"
    Group = "tree"
    Anchor = "the sum of a+b over level n is 2*3**(n-1)"

    def check(self, result):
        for n in self.scale.levels:
            value = cached_level_stats(n).trace_sum
            result.record(
                value == 2 * 3 ** (n - 1), "level %s trace sum %s", n, value
            )
            result.observe(n=n, value=value)


class ComplexityTraceCheck(_Check):
    Name = "complexity-trace"
    Group = "tree"
    Anchor = "the sum of ab over level n equals the sum of (a+b)**2 over level n-1"

    def check(self, result):
        for n in self.scale.levels:
            if n < 2:
                continue
            value = cached_level_stats(n).complexity_sum
            previous = trace_square_sum(n - 1)
            result.record(
                value == previous, "level %s: %s against %s", n, value, previous
            )


class LevelSumCheck(_Check):
    Name = "level-sum"
    Group = "tree"
    Anchor = "the sum of the fractions on level n is 3*2**(n-2) - 1/2"

    def check(self, result):
        for n in self.scale.levels:
            value = cached_level_stats(n).sum
            expected = Fraction(3 * (1 << n) - 2, 4)
            result.record(value == expected, "level %s sum %s", n, value)
            result.observe(n=n, value=value)


class PathRoundtripCheck(_Check):
    Name = "path-roundtrip"
    Group = "tree"
    Anchor = "the path of a node leads back to it and its length is the level minus one"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                path = path_of(r)
                result.record(
                    fraction_at(path) == r and path.length == n - 1,
                    "%s has path %s",
                    r,
                    path,
                )


class RankRoundtripCheck(_Check):
    Name = "rank-roundtrip"
    Group = "tree"
    Anchor = "breadth-first ranks and fractions are mutually inverse"

    def check(self, result):
        for n in self.scale.node_levels:
            k = level_size(n)
            for r in level_iter(n):
                ok = (
                    unrank(k) == r
                    and rank_of(r) == k
                    and rank_of_path(path_of_rank(k)) == k
                )
                result.record(ok, "rank %s and %s", k, r)
                k += 1


class ParentCheck(_Check):
    Name = "parent-child"
    Group = "tree"
    Anchor = "every node other than the root is a child of its parent"

    def check(self, result):
        for n in self.scale.node_levels:
            if n < 2:
                continue
            for r in level_iter(n):
                up = parent(r)
                result.record(r in children(up), "%s has parent %s", r, up)
