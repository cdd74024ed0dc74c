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
Exact positive rationals and dyadic rationals.

Fraction is the value type of every tree node. Dyadic is the exact
image of a positive rational under the question-mark function. Both
are immutable and normalize on construction, so a constructed value
always satisfies its invariants.
"""

import fractions
import math
import numbers
import operator

from . import DomainError


def _as_int(value, name):
    try:
        return operator.index(value)
    except TypeError:
        raise DomainError(f"{name} must be an integer, not {value!r}") from None


class Fraction:
    """A positive rational num/den in lowest terms."""

    __slots__ = ('_num', '_den')

    def __new__(cls, num, den=1):
        """Build the reduced fraction num/den.

        @raises: DomainError for zero or negative parts
        """
        num = _as_int(num, "numerator")
        den = _as_int(den, "denominator")
        if num < 1 or den < 1:
            raise DomainError(f"fraction parts must be positive, got {num}/{den}")
        g = math.gcd(num, den)
        self = super().__new__(cls)
        self._num = num // g
        self._den = den // g
        return self

    @classmethod
    def _reduced(cls, num, den):
        """Trusted constructor for parts already known to be coprime."""
        self = super().__new__(cls)
        self._num = num
        self._den = den
        return self

    @classmethod
    def from_rational(cls, value):
        """Convert a positive numbers.Rational."""
        return cls(value.numerator, value.denominator)

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    # numbers.Rational spelling, so fractions.Fraction can consume us
    numerator = num
    denominator = den

    @property
    def trace(self):
        """t(a/b) = a + b"""
        return self._num + self._den

    @property
    def complexity(self):
        """c(a/b) = ab"""
        return self._num * self._den

    @property
    def simplicity(self):
        """s(a/b) = 1/(ab)"""
        return Fraction._reduced(1, self._num * self._den)

    def reciprocal(self):
        return Fraction._reduced(self._den, self._num)

    def floor(self):
        return self._num // self._den

    def as_rational(self):
        """Return the value as a fractions.Fraction."""
        return fractions.Fraction(self._num, self._den)

    def _parts(self, other):
        if isinstance(other, Fraction):
            return other._num, other._den
        if isinstance(other, numbers.Rational):
            return other.numerator, other.denominator
        return None

    def __add__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        num, den = parts
        return Fraction(self._num * den + num * self._den, self._den * den)

    __radd__ = __add__

    def __mul__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        num, den = parts
        return Fraction(self._num * num, self._den * den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        num, den = parts
        return Fraction(self._num * den, self._den * num)

    def _compare(self, other, op):
        parts = self._parts(other)
        if parts is None:
            return NotImplemented
        num, den = parts
        return op(self._num * den, num * self._den)

    def __eq__(self, other):
        return self._compare(other, operator.eq)

    def __lt__(self, other):
        return self._compare(other, operator.lt)

    def __le__(self, other):
        return self._compare(other, operator.le)

    def __gt__(self, other):
        return self._compare(other, operator.gt)

    def __ge__(self, other):
        return self._compare(other, operator.ge)

    def __hash__(self):
        return hash(fractions.Fraction(self._num, self._den))

    def __reduce__(self):
        return (self.__class__, (self._num, self._den))

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __repr__(self):
        return f"{self.__class__.__name__}({self._num}, {self._den})"

    def __str__(self):
        return f"{self._num}/{self._den}"


numbers.Rational.register(Fraction)


def fraction_new(num, den):
    """Return the reduced equivalent of num/den.

    @raises: DomainError on zero or negative input
    """
    return Fraction(num, den)


def parse_fraction(text):
    """Parse "p/q" or "p" into a Fraction.

    @return: tuple (fraction, was_reduced)
    @raises: DomainError on malformed or non-positive input
    """
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise DomainError(f"not a fraction: {text!r}") from None
    value = Fraction(p, q)
    return value, (value.num, value.den) != (p, q)


class BalancedAccumulator:
    """Fold values with an associative op along a balanced binary tree.

    Only O(log n) partial results are kept, and operands of similar
    size are combined, which keeps big-number sums and products over a
    streamed level fast.
    """

    def __init__(self, op):
        self.op = op
        self.count = 0
        self._stack = []

    def add(self, item):
        weight = 1
        while self._stack and self._stack[-1][0] == weight:
            _, top = self._stack.pop()
            item = self.op(top, item)
            weight *= 2
        self._stack.append((weight, item))
        self.count += 1

    def result(self):
        """@raises: DomainError when nothing was added"""
        if not self._stack:
            raise DomainError("cannot reduce an empty sequence")
        stack = list(self._stack)
        _, result = stack.pop()
        while stack:
            _, top = stack.pop()
            result = self.op(top, result)
        return result


def reduce_balanced(op, items):
    """Fold items with BalancedAccumulator.

    @raises: DomainError when items is empty
    """
    acc = BalancedAccumulator(op)
    for item in items:
        acc.add(item)
    return acc.result()


def fraction_sum_exact(items):
    """Exact sum of a nonempty sequence of Fractions.

    @raises: DomainError on an empty sequence
    """
    total = reduce_balanced(operator.add, (item.as_rational() for item in items))
    return Fraction.from_rational(total)


class Dyadic:
    """A nonnegative dyadic rational mantissa / 2**exp, normalized so
    that exp is zero or mantissa is odd."""

    __slots__ = ('_mantissa', '_exp')

    def __new__(cls, mantissa=0, exp=0):
        mantissa = _as_int(mantissa, "mantissa")
        exp = _as_int(exp, "exponent")
        if mantissa < 0:
            raise DomainError(f"dyadic mantissa must be nonnegative, got {mantissa}")
        if exp < 0:
            mantissa <<= -exp
            exp = 0
        if mantissa == 0:
            exp = 0
        elif exp:
            shift = min(exp, (mantissa & -mantissa).bit_length() - 1)
            mantissa >>= shift
            exp -= shift
        self = super().__new__(cls)
        self._mantissa = mantissa
        self._exp = exp
        return self

    @classmethod
    def from_rational(cls, value):
        """Convert a nonnegative rational whose denominator is a power of two.

        @raises: DomainError for anything else
        """
        num, den = value.numerator, value.denominator
        if num < 0 or den & (den - 1):
            raise DomainError(f"{num}/{den} is not a nonnegative dyadic rational")
        return cls(num, den.bit_length() - 1)

    @property
    def mantissa(self):
        return self._mantissa

    @property
    def exp(self):
        return self._exp

    def floor(self):
        return self._mantissa >> self._exp

    def is_power_of_two(self):
        """True for 2**e with e of any sign."""
        return self._mantissa == 1 or (
            self._exp == 0 and self._mantissa & (self._mantissa - 1) == 0
            and self._mantissa > 0
        )

    def log2(self):
        """Exponent e of a power of two 2**e."""
        if not self.is_power_of_two():
            raise DomainError(f"{self} is not a power of two")
        return self._mantissa.bit_length() - 1 - self._exp

    def as_rational(self):
        return fractions.Fraction(self._mantissa, 1 << self._exp)

    def _aligned(self, other):
        exp = max(self._exp, other._exp)
        return (
            self._mantissa << (exp - self._exp),
            other._mantissa << (exp - other._exp),
            exp,
        )

    def __add__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dyadic_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return dyadic_sub(self, other)

    def _compare(self, other, op):
        if isinstance(other, Dyadic):
            a, b, _ = self._aligned(other)
            return op(a, b)
        if isinstance(other, numbers.Rational):
            return op(self._mantissa * other.denominator,
                      other.numerator << self._exp)
        return NotImplemented

    def __eq__(self, other):
        return self._compare(other, operator.eq)

    def __lt__(self, other):
        return self._compare(other, operator.lt)

    def __le__(self, other):
        return self._compare(other, operator.le)

    def __gt__(self, other):
        return self._compare(other, operator.gt)

    def __ge__(self, other):
        return self._compare(other, operator.ge)

    def __hash__(self):
        return hash(self.as_rational())

    def __reduce__(self):
        return (self.__class__, (self._mantissa, self._exp))

    def __repr__(self):
        return f"{self.__class__.__name__}({self._mantissa}, {self._exp})"

    def __str__(self):
        if self._exp == 0:
            return str(self._mantissa)
        return f"{self._mantissa}/{1 << self._exp}"


def dyadic_add(x, y):
    """Exact sum x + y."""
    a, b, exp = x._aligned(y)
    return Dyadic(a + b, exp)


def dyadic_sub(x, y):
    """Exact difference x - y.

    @raises: DomainError when the result would be negative
    """
    a, b, exp = x._aligned(y)
    if a < b:
        raise DomainError(f"dyadic underflow: {x} - {y} is negative")
    return Dyadic(a - b, exp)


def dyadic_scale_pow2(x, shift):
    """Exact product x * 2**shift; shift may be negative."""
    return Dyadic(x.mantissa, x.exp - _as_int(shift, "shift"))
