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
Test the diagonal families and the Stern sequence.
"""

import fractions
import threading
import unittest

from parameterized import parameterized

from cwkit import DomainError
from cwkit.arith import Fraction, parse_fraction
from cwkit.checks.golden import CONSTANTS, DIAGONALS
from cwkit.diagonals import (
    CoverageWitness,
    SternSequence,
    coefficient_pair,
    coefficient_ratio,
    column_address,
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
    right_diagonal,
    right_diagonal_element,
    solve_membership,
    stern,
    t_value,
)
from cwkit.tree import NodeAddress

STERN = (1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1)


def frac(text):
    return parse_fraction(text)[0]


class TestDiagonal(unittest.TestCase):
    def test_labels(self):
        labels = tuple(str(diag) for diag in iter_diagonals(16))
        self.assertEqual(labels, DIAGONALS)

    @parameterized.expand([(n,) for n in (1, 2, 6, 11, 16, 37, 1000)])
    def test_direct_matches_iterated(self, n):
        self.assertEqual(diagonal(n), list(iter_diagonals(n))[-1])

    def test_element(self):
        self.assertEqual(str(diagonal(6)), "(3j+2)/(2j+1)")
        self.assertEqual(diagonal_element(6, 1), frac("5/3"))
        self.assertEqual(diagonal_element(6, 2), frac("8/5"))
        self.assertEqual(diagonal_element(1, 4), frac("1/4"))
        self.assertRaises(DomainError, diagonal_element, 6, 0)
        self.assertRaises(DomainError, diagonal, 0)

    def test_right(self):
        self.assertEqual(str(right_diagonal(6)), "(2j+1)/(3j+2)")
        self.assertEqual(right_diagonal(6).side, "R")
        self.assertEqual(right_diagonal_element(6, 2), frac("5/8"))

    def test_determinant(self):
        for diag in iter_diagonals(64):
            self.assertIn(diag.determinant, (-1, 1))

    @parameterized.expand([(2, 1), (6, 1), (6, 3), (11, 2), (16, 4)])
    def test_column_oracle(self, n, j):
        self.assertEqual(diagonal_element(n, j), column_oracle(n, j))

    def test_column_address(self):
        self.assertEqual(column_address(6, 1), NodeAddress(4, 6))
        self.assertEqual(column_address(1, 3), NodeAddress(3, 1))

    def test_membership(self):
        self.assertEqual(solve_membership(frac("8/5"), 6), 2)
        self.assertEqual(solve_membership(frac("1/7"), 1), 7)
        self.assertIsNone(solve_membership(frac("1/2"), 6))
        self.assertIsNone(solve_membership(frac("3/2"), 6))


class TestStern(unittest.TestCase):
    def test_values(self):
        self.assertEqual(tuple(stern(m) for m in range(16)), STERN)

    def test_diatomic(self):
        for m in range(200):
            self.assertEqual(stern(m), diatomic(m + 1))
        self.assertEqual(diatomic(0), 0)

    def test_own_cache(self):
        seq = SternSequence()
        self.assertEqual(len(seq), 1)
        self.assertEqual(seq[10], 5)
        self.assertEqual(len(seq), 11)
        self.assertEqual(seq[3], 1)

    def test_shared_cache_threads(self):
        seq = SternSequence()
        mismatches = []

        def read(offset):
            for m in range(offset, 5000, 7):
                if seq[m] != diatomic(m + 1):
                    mismatches.append(m)

        threads = [threading.Thread(target=read, args=(i,)) for i in range(7)]
        for thread in threads:
            thread.start()
        for thread in threads:
            thread.join()
        self.assertEqual(mismatches, [])
        self.assertGreaterEqual(len(seq), 4994)
        self.assertEqual(seq.cache, [diatomic(m + 1) for m in range(len(seq))])

    def test_invalid(self):
        self.assertRaises(DomainError, stern, -1)
        self.assertRaises(DomainError, diatomic, -1)
        self.assertRaises(DomainError, t_value, 0)

    def test_t_value(self):
        self.assertEqual(t_value(1), Fraction(1, 1))
        self.assertEqual(t_value(5), frac("3/2"))


class TestCoefficients(unittest.TestCase):
    def test_coefficient_ratio(self):
        for n in range(1, 64):
            self.assertEqual(coefficient_ratio(n), (stern(n - 1), stern(n)))

    @parameterized.expand([(4, 2), (9, 5), (6, 1), (2, 1)])
    def test_constant_index(self, n, m):
        self.assertEqual(constant_index(n), m)

    def test_constants_follow_stern(self):
        for n in range(2, 128):
            if (n + 1) & n == 0:
                self.assertRaises(DomainError, constant_index, n)
                self.assertEqual(constant_pair(n + 1), (1, 0))
                continue
            m = constant_index(n)
            self.assertEqual(constant_pair(n + 1), (stern(m - 1), stern(m)))

    def test_pairs(self):
        self.assertEqual(coefficient_pair(6), (3, 2))
        self.assertEqual(constant_pair(6), (2, 1))

    def test_constant_table(self):
        pairs = ["%d/%d" % constant_pair(n) for n in range(1, 17)]
        self.assertEqual(pairs, list(CONSTANTS))

    def test_constant_index_invalid(self):
        self.assertRaises(DomainError, constant_index, 1)
        self.assertRaises(DomainError, constant_index, 3)


class TestLimits(unittest.TestCase):
    def test_limit(self):
        self.assertEqual(diagonal_limit(6), frac("3/2"))
        self.assertEqual(diagonal_limit(2), Fraction(1, 1))
        self.assertEqual(limit_value(1), fractions.Fraction(0))
        self.assertEqual(limit_value(6), fractions.Fraction(3, 2))
        self.assertRaises(DomainError, diagonal_limit, 1)
        self.assertRaises(DomainError, diagonal_limit, 0)

    def test_limit_matches_stern(self):
        for n in range(2, 64):
            self.assertEqual(
                diagonal_limit(n), Fraction(stern(n - 2), stern(n - 1))
            )


class TestCoverage(unittest.TestCase):
    @parameterized.expand([
        ("7/5", 2, 10, 3, 1),
        ("2/1", 2, 2, 1, 1),
        ("1/1", 1, 1, 1, 1),
    ])
    def test_witness(self, text, n, index, i, j):
        r = frac(text)
        witness = coverage_witness(r, n)
        self.assertEqual(witness, CoverageWitness(index, i, j))
        self.assertEqual(diagonal_element(witness.index, witness.j), r)

    def test_interval(self):
        self.assertRaises(DomainError, coverage_witness, frac("1/2"), 2)
        self.assertRaises(DomainError, coverage_witness, frac("5/2"), 2)
