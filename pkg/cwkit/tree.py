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
Navigation and enumeration of the Calkin-Wilf tree.

The root is 1/1 and a/b has the children a/(a+b) and (a+b)/b. Levels
are numbered from 1 (the root) and positions inside a level from 1,
so the node at level n, position j has the breadth-first rank
2**(n-1) + j - 1.
"""

import dataclasses
import fractions
import itertools
import math
import operator
import re
from typing import Optional

from . import DomainError, RootHasNoParentError, log, LOG_TREE
from .arith import Fraction, BalancedAccumulator, _as_int, reduce_balanced

LEFT = "L"
RIGHT = "R"
DIRECTIONS = (LEFT, RIGHT)
ROOT_LABEL = "(root)"

_run_re = re.compile(r"([LR])(?:\^(\d+))?")
_path_re = re.compile(r"(?:[LR](?:\^\d+)?)+")


class Path:
    """Run-length encoded descent from the root, read root to node.

    Runs are (direction, count) pairs with count >= 1 and alternating
    directions; the empty path is the root.
    """

    __slots__ = ('_runs',)

    def __new__(cls, runs=()):
        checked = []
        for direction, count in runs:
            if direction not in DIRECTIONS:
                raise DomainError(f"invalid path direction {direction!r}")
            count = _as_int(count, "run length")
            if count < 1:
                raise DomainError(f"run length must be positive, got {count}")
            if checked and checked[-1][0] == direction:
                raise DomainError("adjacent path runs must alternate direction")
            checked.append((direction, count))
        self = super().__new__(cls)
        self._runs = tuple(checked)
        return self

    @classmethod
    def from_steps(cls, steps):
        """Build a path from single steps, merging repeated directions."""
        return cls(
            (direction, sum(1 for _ in group))
            for direction, group in itertools.groupby(steps)
        )

    @classmethod
    def parse(cls, text):
        """Parse "RLLR", "R L^2 R" or "(root)"."""
        text = text.strip()
        if text in ("", ROOT_LABEL):
            return cls()
        compact = re.sub(r"\s+", "", text).upper()
        if not _path_re.fullmatch(compact):
            raise DomainError(f"invalid path {text!r}")
        path = cls()
        for direction, count in _run_re.findall(compact):
            path = path.extend(direction, int(count or 1))
        return path

    @property
    def runs(self):
        return self._runs

    @property
    def length(self):
        """Number of single steps."""
        return sum(count for _, count in self._runs)

    def __len__(self):
        return self.length

    def __bool__(self):
        return bool(self._runs)

    def steps(self):
        """Yield the single directions root to node."""
        for direction, count in self._runs:
            yield from itertools.repeat(direction, count)

    def extend(self, direction, count=1):
        """Return this path followed by count steps in direction."""
        return self.concat(Path([(direction, count)]))

    def concat(self, other):
        runs = list(self._runs)
        for direction, count in other.runs:
            if runs and runs[-1][0] == direction:
                runs[-1] = (direction, runs[-1][1] + count)
            else:
                runs.append((direction, count))
        return Path(runs)

    def reversed(self):
        return Path(reversed(self._runs))

    def mirror(self):
        """Swap L and R; leads to the reciprocal node."""
        swap = {LEFT: RIGHT, RIGHT: LEFT}
        return Path((swap[d], c) for d, c in self._runs)

    def __eq__(self, other):
        if not isinstance(other, Path):
            return NotImplemented
        return self._runs == other._runs

    def __hash__(self):
        return hash(self._runs)

    def __repr__(self):
        return f"Path({list(self._runs)!r})"

    def __str__(self):
        if not self._runs:
            return ROOT_LABEL
        return " ".join(
            direction if count == 1 else f"{direction}^{count}"
            for direction, count in self._runs
        )


@dataclasses.dataclass(frozen=True)
class NodeAddress:
    """Level (root = 1) and 1-based position inside the level."""

    level: int
    position: int

    def __post_init__(self):
        if self.level < 1:
            raise DomainError(f"level must be positive, got {self.level}")
        if not 1 <= self.position <= level_size(self.level):
            raise DomainError(
                f"position {self.position} outside level {self.level}"
            )

    @property
    def rank(self):
        return level_size(self.level) + self.position - 1


@dataclasses.dataclass(frozen=True)
class LevelStats:
    """Aggregates over one level. prev_trace_square_sum is None at level 1
    and both optional fields are None when not requested."""

    level: int
    count: int
    sum: Fraction
    trace_sum: int
    simplicity_sum: Fraction
    product: Fraction
    complexity_product: Optional[int]
    complexity_sum: int
    prev_trace_square_sum: Optional[int]


def level_size(n):
    """Number of nodes on level n."""
    return 1 << (n - 1)


def children(r):
    """Return (left, right) = (a/(a+b), (a+b)/b)."""
    a, b = r.num, r.den
    return Fraction._reduced(a, a + b), Fraction._reduced(a + b, b)


def parent(r):
    """Return the parent of r.

    @raises: RootHasNoParentError for 1/1
    """
    a, b = r.num, r.den
    if a < b:
        # r is a left child a/(a+b')
        return Fraction._reduced(a, b - a)
    if a > b:
        # r is a right child (a'+b)/b
        return Fraction._reduced(a - b, b)
    raise RootHasNoParentError("the root 1/1 has no parent")


def path_of(r):
    """Return the root-to-node path of r.

    Walks parents upward, batching each run of equal steps with one
    division so values like 1/10**6 stay cheap.
    """
    a, b = r.num, r.den
    runs = []
    while a != b:
        if a < b:
            k = (b - 1) // a
            b -= k * a
            runs.append((LEFT, k))
        else:
            k = (a - 1) // b
            a -= k * b
            runs.append((RIGHT, k))
    runs.reverse()
    return Path(runs)


def fraction_at(path):
    """Return the fraction reached by walking path from the root."""
    a = b = 1
    for direction, count in path.runs:
        if direction == LEFT:
            b += count * a
        else:
            a += count * b
    return Fraction._reduced(a, b)


def path_of_rank(k):
    """Path spelled by the binary digits of k after the leading 1."""
    k = _as_int(k, "rank")
    if k < 1:
        raise DomainError(f"rank must be positive, got {k}")
    bits = bin(k)[3:]
    return Path.from_steps(RIGHT if bit == "1" else LEFT for bit in bits)


def rank_of_path(path):
    rank = 1
    for direction, count in path.runs:
        rank <<= count
        if direction == RIGHT:
            rank |= (1 << count) - 1
    return rank


def rank_of(r):
    """Return the 1-based breadth-first rank of r."""
    return rank_of_path(path_of(r))


def unrank(k):
    """Return the fraction with breadth-first rank k.

    @raises: DomainError for k < 1
    """
    return fraction_at(path_of_rank(k))


def address_of_rank(k):
    k = _as_int(k, "rank")
    if k < 1:
        raise DomainError(f"rank must be positive, got {k}")
    level = k.bit_length()
    return NodeAddress(level, k - level_size(level) + 1)


def address_of(r):
    return address_of_rank(rank_of(r))


def fraction_at_address(address):
    return unrank(address.rank)


def level_of(r):
    """Level of r, i.e. path length plus one."""
    return path_of(r).length + 1


def successor(r):
    """Next fraction in breadth-first order.

    With q = floor(a/b) the successor of a/b is b/(b(2q+1) - a); the
    last node k/1 of a level is followed by 1/(k+1).
    """
    a, b = r.num, r.den
    q = a // b
    return Fraction._reduced(b, b * (2 * q + 1) - a)


def level_iter(n, start=1, stop=None):
    """Yield the fractions of level n at positions start..stop in order.

    Only the current fraction is held, so any level can be streamed.
    Position ranges allow a level to be split between workers.
    """
    n = _as_int(n, "level")
    if n < 1:
        raise DomainError(f"level must be positive, got {n}")
    size = level_size(n)
    if stop is None:
        stop = size
    if not 1 <= start <= stop <= size:
        raise DomainError(f"invalid position range {start}..{stop} on level {n}")
    log.debug(LOG_TREE, "streaming level %d positions %d..%d", n, start, stop)
    current = fraction_at_address(NodeAddress(n, start))
    for _ in range(stop - start):
        yield current
        current = successor(current)
    yield current


def level_partitions(n, parts):
    """Split level n into at most parts contiguous (start, stop) ranges."""
    size = level_size(n)
    parts = max(1, min(parts, size))
    step, extra = divmod(size, parts)
    start = 1
    for i in range(parts):
        stop = start + step - 1 + (1 if i < extra else 0)
        yield start, stop
        start = stop + 1


def level_sum(n):
    """Exact sum of the fractions on level n.

    Numerators are added per denominator first, so only one rational
    addition happens per distinct denominator.
    """
    by_den = {}
    for r in level_iter(n):
        by_den[r.den] = by_den.get(r.den, 0) + r.num
    return _sum_by_den(by_den)


def _sum_by_den(by_den):
    total = BalancedAccumulator(operator.add)
    for den in sorted(by_den):
        total.add(fractions.Fraction(by_den[den], den))
    return Fraction.from_rational(total.result())


def level_stats(n, squares=True, previous=True):
    """Compute the level aggregates of level n in one streaming pass.

    @param squares: also multiply up complexity_product, which grows
        with the level size; None otherwise
    @param previous: also stream level n - 1 for prev_trace_square_sum;
        None otherwise
    """
    by_den = {}
    trace_sum = 0
    complexity_sum = 0
    count = 0
    simplicity = BalancedAccumulator(operator.add)
    ab_product = BalancedAccumulator(operator.mul) if squares else None
    product = fractions.Fraction(1)
    for r in level_iter(n):
        a, b = r.num, r.den
        count += 1
        by_den[b] = by_den.get(b, 0) + a
        trace_sum += a + b
        complexity_sum += a * b
        simplicity.add(fractions.Fraction(1, a * b))
        if ab_product is not None:
            ab_product.add(a * b)
        product *= fractions.Fraction(a, b)
    prev = None
    if previous and n >= 2:
        prev = trace_square_sum(n - 1)
    log.debug(LOG_TREE, "level %d statistics over %d nodes", n, count)
    return LevelStats(
        level=n,
        count=count,
        sum=_sum_by_den(by_den),
        trace_sum=trace_sum,
        simplicity_sum=Fraction.from_rational(simplicity.result()),
        product=Fraction.from_rational(product),
        complexity_product=(
            ab_product.result() if ab_product is not None else None
        ),
        complexity_sum=complexity_sum,
        prev_trace_square_sum=prev,
    )


def trace_square_sum(n):
    """Sum of (a+b)**2 over level n."""
    return sum((r.num + r.den) ** 2 for r in level_iter(n))


def complexity_product(n):
    """Product of ab over level n."""
    return reduce_balanced(operator.mul, (r.num * r.den for r in level_iter(n)))


def is_perfect_square(value):
    """Exact test via integer square root."""
    return value >= 0 and math.isqrt(value) ** 2 == value
