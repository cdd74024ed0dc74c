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
Identities between continued fractions and tree paths.
"""

from . import _Check, SAMPLE_MAX_PART
from ..arith import Fraction
from ..contfrac import (
    ContinuedFraction,
    cf_to_path,
    from_cf,
    path_to_cf,
    to_cf,
)
from ..tree import LEFT, RIGHT, Path, level_iter, parent


def parent_walk(r):
    """Root-to-node path found one parent step at a time."""
    steps = []
    while r.num != r.den:
        steps.append(LEFT if r.num < r.den else RIGHT)
        r = parent(r)
    steps.reverse()
    return Path.from_steps(steps)


class DigitSumCheck(_Check):
    Name = "digit-sum"
    Group = "contfrac"
    Anchor = "the continued fraction digit sum of a node equals its level"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                cf = to_cf(r)
                result.record(cf.digit_sum == n, "%s = %s on level %s", r, cf, n)


class RoundtripCheck(_Check):
    Name = "cf-roundtrip"
    Group = "contfrac"
    Anchor = "evaluating the canonical continued fraction or its alias returns the fraction"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                self.check_one(result, r)
        rng = self.scale.rng(self.Name)
        for _ in range(self.scale.samples):
            r = Fraction(
                rng.randint(1, SAMPLE_MAX_PART), rng.randint(1, SAMPLE_MAX_PART)
            )
            self.check_one(result, r)

    def check_one(self, result, r):
        cf = to_cf(r)
        result.record(
            cf.is_canonical() and from_cf(cf) == r and from_cf(cf.alias()) == r,
            "%s expands to %s",
            r,
            cf,
        )


class PathCorrespondenceCheck(_Check):
    Name = "cf-path-correspondence"
    Group = "contfrac"
    Anchor = (
        "the node path read upward is R^a0 L^a1 R^a2 ... with the last "
        "exponent lowered by one"
    )

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                cf = to_cf(r)
                walked = parent_walk(r)
                result.record(
                    cf_to_path(cf) == walked and path_to_cf(walked) == cf,
                    "%s = %s walks %s",
                    r,
                    cf,
                    walked,
                )


class ReciprocalCheck(_Check):
    Name = "cf-reciprocal"
    Group = "contfrac"
    Anchor = "for r > 1 the expansion of 1/r is [0; a0, a1, ...]"

    def check(self, result):
        for n in self.scale.node_levels:
            for r in level_iter(n):
                if not r > 1:
                    continue
                terms = to_cf(r).terms
                result.record(
                    to_cf(r.reciprocal()) == ContinuedFraction((0,) + terms),
                    "%s and its reciprocal",
                    r,
                )
