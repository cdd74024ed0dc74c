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
Verification checks. Each check class tests one identity over a range
of instances chosen from the verification depth and reports a
CheckResult; a run over a selection of checks yields a VerifyReport.
"""

import dataclasses
import functools
import json
import math
import random

from .. import CWKitError, log, LOG_VERIFY
from ..decorators import notimplemented, synchronized
from ..lock import get_lock
from ..tree import level_stats

STATUS_PASS = "pass"
STATUS_FAIL = "fail"

# report order of the check groups
GROUPS = ("tree", "contfrac", "diagonals", "minkowski", "golden")

# caps for exhaustive per-node and big-aggregate checks
NODE_MAX_LEVEL = 16
SQUARE_MAX_LEVEL = 16
DIAGONAL_MAX_EXP = 10

# sampled checks draw from fixed ranges so every depth sees the same samples
SAMPLE_MAX_PART = 10 ** 6
SAMPLE_MAX_PATH = 12
SAMPLE_MAX_RUN = 8


class VerifyScale:
    """Instance ranges derived from a verification depth. Every bound
    grows with the depth, so a deeper run repeats all shallower ones."""

    def __init__(self, depth, qdepth=14, samples=200, seed=0):
        self.depth = depth
        self.qdepth = qdepth
        self.samples = samples
        self.seed = seed

    @property
    def levels(self):
        """Levels for streamed per-level aggregates."""
        return range(1, self.depth + 1)

    @property
    def node_levels(self):
        """Levels for exhaustive per-node checks."""
        return range(1, min(self.depth, NODE_MAX_LEVEL) + 1)

    @property
    def square_levels(self):
        return range(1, min(self.depth, SQUARE_MAX_LEVEL) + 1)

    @property
    def qmark_levels(self):
        """Levels for the question-mark checks that visit every node."""
        return range(1, min(self.depth, self.qdepth) + 1)

    @property
    def qmark_sum_levels(self):
        return range(1, min(self.depth, NODE_MAX_LEVEL) + 1)

    @property
    def diagonal_bound(self):
        """Largest diagonal index for the diagonal structure checks."""
        return 1 << min(self.depth, DIAGONAL_MAX_EXP)

    @property
    def column_bound(self):
        """Largest column j for element-wise diagonal checks."""
        return 1 << math.ceil(min(self.depth, DIAGONAL_MAX_EXP) / 2)

    @property
    def determinant_bound(self):
        return 1 << min(self.depth + 7, 17)

    @property
    def monotone_bound(self):
        return 1 << min(self.depth, 8)

    @property
    def monotone_columns(self):
        return 1 << min(self.depth, 6)

    @property
    def coverage_denominator(self):
        return min(30, 3 * self.depth)

    @property
    def map_bound(self):
        return 1 << min(self.depth, 6)

    @property
    def map_columns(self):
        return 1 << min(math.ceil(self.depth / 2), 5)

    def rng(self, name):
        """Random generator private to one check."""
        return random.Random(f"{self.seed}:{name}")


def render(value):
    """Text form for report values; big integers stay decimal strings."""
    if isinstance(value, (list, tuple)):
        return "(%s)" % ", ".join(render(item) for item in value)
    return str(value)


class CheckResult:
    """Outcome of one check: instance count and the first failure."""

    def __init__(self, name, anchor):
        self.name = name
        self.anchor = anchor
        self.instances = 0
        self.counterexample = None
        self.observations = []

    def record(self, ok, msg="", *args):
        """Count one instance. msg % args renders the first failure only."""
        self.instances += 1
        if not ok and self.counterexample is None:
            self.counterexample = msg % tuple(render(arg) for arg in args)
            log.info(LOG_VERIFY, "%s failed: %s", self.name, self.counterexample)
        return ok

    def observe(self, **values):
        self.observations.append({key: render(val) for key, val in values.items()})

    def error(self, exc):
        """Turn an exception inside the check into a failure."""
        self.instances += 1
        if self.counterexample is None:
            self.counterexample = f"{exc.__class__.__name__}: {exc}"

    @property
    def status(self):
        if self.counterexample is None and self.instances:
            return STATUS_PASS
        return STATUS_FAIL

    @property
    def passed(self):
        return self.status == STATUS_PASS

    def to_dict(self):
        result = {
            "name": self.name,
            "anchor": self.anchor,
            "instances": self.instances,
            "status": self.status,
            "counterexample": self.counterexample
            or (None if self.instances else "no instances checked"),
        }
        if self.observations:
            result["observations"] = self.observations
        return result


@dataclasses.dataclass
class VerifyReport:
    """Results of one verification run in fixed check order."""

    depth: int
    checks: list

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def to_dict(self):
        return {
            "depth": self.depth,
            "passed": self.passed,
            "checks": [check.to_dict() for check in self.checks],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)


class _Check:
    """Base class of all checks.

    Subclasses set Name, Group and Anchor and implement check().
    Golden checks compare against fixed reference data and only run
    on request.
    """

    # identity name, usable in --select
    Name = None
    # report group from GROUPS
    Group = None
    # the identity in words
    Anchor = None
    Golden = False

    def __init__(self, scale):
        self.scale = scale

    def run(self):
        """Run the check, converting stray exceptions to a failure."""
        result = CheckResult(self.Name, self.Anchor)
        log.debug(LOG_VERIFY, "running %s", self.Name)
        try:
            self.check(result)
        except Exception as exc:
            log.exception(LOG_VERIFY, "check %s raised", self.Name)
            result.error(exc)
        return result

    @notimplemented
    def check(self, result):
        """Record the instances of the identity on result."""
        pass

    def __repr__(self):
        return f"<{self.__class__.__name__} {self.Name}>"


@synchronized(get_lock("level_stats", debug=True))
@functools.lru_cache(maxsize=None)
def cached_level_stats(n):
    """Streamed level_stats shared by all checks of one process."""
    return level_stats(n, squares=False, previous=False)


def _get_checks():
    """Return all check classes in report order."""
    from .. import loader

    modules = loader.get_package_modules('checks', __path__)
    classes = list(loader.get_plugins(modules, [_Check]))
    return sorted(classes, key=lambda cls: GROUPS.index(cls.Group))


CheckClasses = _get_checks()
CheckNames = [x.Name for x in CheckClasses]


def select_checks(names=None, golden=False):
    """Check classes for a selection of names; None or "all" selects
    every non-golden check. golden adds the reference comparisons.

    @raises: CWKitError on unknown names
    """
    if not names or "all" in names:
        selected = [cls for cls in CheckClasses if not cls.Golden]
    else:
        unknown = [name for name in names if name not in CheckNames]
        if unknown:
            raise CWKitError(
                "unknown check name(s) %s; known names: %s"
                % (", ".join(unknown), ", ".join(CheckNames))
            )
        selected = [cls for cls in CheckClasses if cls.Name in names]
    if golden:
        selected.extend(
            cls for cls in CheckClasses if cls.Golden and cls not in selected
        )
    return selected
