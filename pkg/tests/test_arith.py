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
Test exact fractions and dyadic rationals.
"""

import fractions
import operator
import unittest

from parameterized import parameterized

from cwkit import DomainError
from cwkit.arith import (
    BalancedAccumulator,
    Dyadic,
    Fraction,
    dyadic_add,
    dyadic_scale_pow2,
    dyadic_sub,
    fraction_new,
    fraction_sum_exact,
    parse_fraction,
    reduce_balanced,
)


class TestFraction(unittest.TestCase):
    @parameterized.expand([
        (6, 4, 3, 2),
        (2, 8, 1, 4),
        (7, 5, 7, 5),
        (10 ** 30, 10 ** 29, 10, 1),
    ])
    def test_reduce(self, p, q, num, den):
        r = fraction_new(p, q)
        self.assertEqual((r.num, r.den), (num, den))

    def test_idempotent(self):
        r = fraction_new(12, 18)
        self.assertEqual(fraction_new(r.num, r.den), r)

    @parameterized.expand([(0, 1), (1, 0), (-1, 2), (3, -4)])
    def test_nonpositive(self, p, q):
        self.assertRaises(DomainError, fraction_new, p, q)

    def test_non_integer(self):
        self.assertRaises(DomainError, Fraction, 1.5, 2)

    def test_reciprocal_involution(self):
        r = Fraction(7, 5)
        self.assertEqual(r.reciprocal(), Fraction(5, 7))
        self.assertEqual(r.reciprocal().reciprocal(), r)

    def test_measures(self):
        r = Fraction(3, 5)
        self.assertEqual(r.trace, 8)
        self.assertEqual(r.complexity, 15)
        self.assertEqual(r.simplicity, Fraction(1, 15))
        self.assertEqual(Fraction(7, 2).floor(), 3)

    def test_arithmetic(self):
        self.assertEqual(Fraction(1, 2) + Fraction(1, 3), Fraction(5, 6))
        self.assertEqual(Fraction(2, 3) * Fraction(3, 4), Fraction(1, 2))
        self.assertEqual(Fraction(1, 2) / Fraction(1, 4), Fraction(2, 1))
        self.assertEqual(Fraction(1, 2) + 1, Fraction(3, 2))
        self.assertEqual(2 * Fraction(1, 4), Fraction(1, 2))

    def test_compare_with_rationals(self):
        self.assertEqual(Fraction(1, 2), fractions.Fraction(2, 4))
        self.assertLess(Fraction(1, 3), Fraction(1, 2))
        self.assertGreater(Fraction(3, 2), 1)
        self.assertEqual(Fraction(4, 2), 2)
        self.assertEqual(hash(Fraction(3, 4)), hash(fractions.Fraction(3, 4)))
        self.assertEqual(len({Fraction(1, 2), Fraction(2, 4)}), 1)

    def test_str(self):
        self.assertEqual(str(Fraction(7, 5)), "7/5")
        self.assertEqual(str(Fraction(3)), "3/1")
        self.assertEqual(repr(Fraction(7, 5)), "Fraction(7, 5)")

    @parameterized.expand([
        ("7/5", 7, 5, False),
        ("2/4", 1, 2, True),
        (" 3 ", 3, 1, False),
        ("12/8", 3, 2, True),
    ])
    def test_parse(self, text, num, den, reduced):
        value, was_reduced = parse_fraction(text)
        self.assertEqual((value.num, value.den, was_reduced), (num, den, reduced))

    @parameterized.expand([("abc",), ("1/x",), ("0/3",), ("-1/2",), ("",)])
    def test_parse_error(self, text):
        self.assertRaises(DomainError, parse_fraction, text)


class TestSums(unittest.TestCase):
    def test_level_two(self):
        self.assertEqual(
            fraction_sum_exact([Fraction(1, 2), Fraction(2, 1)]), Fraction(5, 2)
        )

    def test_level_three(self):
        values = [Fraction(1, 3), Fraction(3, 2), Fraction(2, 3), Fraction(3, 1)]
        self.assertEqual(fraction_sum_exact(values), Fraction(11, 2))

    def test_empty(self):
        self.assertRaises(DomainError, fraction_sum_exact, [])
        self.assertRaises(DomainError, BalancedAccumulator(operator.add).result)

    def test_balanced_matches_fold(self):
        items = list(range(1, 101))
        self.assertEqual(reduce_balanced(operator.add, items), sum(items))
        acc = BalancedAccumulator(operator.mul)
        for item in range(1, 21):
            acc.add(item)
        self.assertEqual(acc.result(), 2432902008176640000)
        self.assertEqual(acc.count, 20)

    def test_order_kept(self):
        # a non-commutative op shows that operands keep their order
        self.assertEqual(reduce_balanced(operator.add, list("abcdefg")), "abcdefg")


class TestDyadic(unittest.TestCase):
    def test_normalize(self):
        x = Dyadic(6, 3)
        self.assertEqual((x.mantissa, x.exp), (3, 2))
        self.assertEqual(Dyadic(0, 5), Dyadic(0))
        self.assertEqual(Dyadic(3, -2), Dyadic(12))

    def test_negative(self):
        self.assertRaises(DomainError, Dyadic, -1, 0)

    def test_add_sub(self):
        x = Dyadic(3, 2)
        y = Dyadic(5, 3)
        self.assertEqual(dyadic_add(x, y), Dyadic(11, 3))
        self.assertEqual(dyadic_sub(dyadic_add(x, y), y), x)
        self.assertEqual(x + y - y, x)
        self.assertRaises(DomainError, dyadic_sub, y, Dyadic(1))

    def test_scale(self):
        self.assertEqual(dyadic_scale_pow2(Dyadic(3, 2), -2), Dyadic(3, 4))
        self.assertEqual(dyadic_scale_pow2(Dyadic(3, 2), 2), Dyadic(3))

    def test_from_rational(self):
        self.assertEqual(Dyadic.from_rational(fractions.Fraction(11, 16)), Dyadic(11, 4))
        self.assertRaises(DomainError, Dyadic.from_rational, fractions.Fraction(1, 3))

    def test_compare(self):
        self.assertLess(Dyadic(5, 3), Dyadic(3, 2))
        self.assertEqual(Dyadic(1, 1), fractions.Fraction(1, 2))
        self.assertGreater(Dyadic(7), 6)
        self.assertEqual(hash(Dyadic(3, 2)), hash(fractions.Fraction(3, 4)))

    def test_compare_with_fraction(self):
        self.assertEqual(Dyadic(1), Fraction(1, 1))
        self.assertEqual(Fraction(3, 4), Dyadic(3, 2))
        self.assertNotEqual(Dyadic(3, 2), Fraction(2, 3))
        self.assertLess(Dyadic(5, 3), Fraction(2, 3))
        self.assertGreater(Fraction(7, 2), Dyadic(13, 2))
        self.assertEqual(hash(Dyadic(11, 1)), hash(Fraction(11, 2)))

    def test_log2(self):
        self.assertEqual(Dyadic(1, 3).log2(), -3)
        self.assertEqual(Dyadic(8).log2(), 3)
        self.assertRaises(DomainError, Dyadic(3, 2).log2)

    def test_str(self):
        self.assertEqual(str(Dyadic(13, 4)), "13/16")
        self.assertEqual(str(Dyadic(3)), "3")
        self.assertEqual(str(Dyadic(0)), "0")
        self.assertEqual(Dyadic(7, 2).floor(), 1)
