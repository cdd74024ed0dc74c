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
Test check selection, results and reports.
"""

import json
import unittest
from unittest.mock import patch

from parameterized import parameterized

from cwkit import CWKitError
from cwkit.arith import Fraction
from cwkit.checks import (
    GROUPS,
    STATUS_FAIL,
    STATUS_PASS,
    CheckClasses,
    CheckNames,
    CheckResult,
    VerifyReport,
    VerifyScale,
    cached_level_stats,
    render,
    select_checks,
)
from cwkit.checks.tree import children_stream
from cwkit.tree import level_iter


def run_selected(names, depth=3, golden=False):
    scale = VerifyScale(depth, samples=20, seed=1)
    return [cls(scale).run() for cls in select_checks(names, golden=golden)]


class TestSelection(unittest.TestCase):
    def test_names_unique(self):
        self.assertEqual(len(CheckNames), len(set(CheckNames)))
        self.assertIn("trace-sum", CheckNames)
        self.assertIn("qmark-diagonal-golden", CheckNames)

    def test_group_order(self):
        groups = [GROUPS.index(cls.Group) for cls in CheckClasses]
        self.assertEqual(groups, sorted(groups))
        self.assertTrue(all(cls.Anchor for cls in CheckClasses))

    def test_all(self):
        selected = select_checks()
        self.assertEqual(select_checks(["all"]), selected)
        self.assertFalse(any(cls.Golden for cls in selected))
        self.assertEqual(len(selected), sum(1 for cls in CheckClasses if not cls.Golden))

    def test_golden(self):
        selected = select_checks(golden=True)
        self.assertEqual(len(selected), len(CheckClasses))
        self.assertTrue(selected[-1].Golden)

    def test_named(self):
        selected = select_checks(["level-sum", "trace-sum"])
        self.assertEqual({cls.Name for cls in selected}, {"level-sum", "trace-sum"})

    def test_named_keeps_report_order(self):
        names = [cls.Name for cls in select_checks(["qmark-order", "reduced"])]
        self.assertEqual(names, ["reduced", "qmark-order"])

    def test_unknown(self):
        with self.assertRaises(CWKitError) as cm:
            select_checks(["no-such-check"])
        self.assertIn("no-such-check", str(cm.exception))


class TestScale(unittest.TestCase):
    def test_ranges(self):
        scale = VerifyScale(5, qdepth=3)
        self.assertEqual(list(scale.levels), [1, 2, 3, 4, 5])
        self.assertEqual(list(scale.qmark_levels), [1, 2, 3])
        self.assertEqual(scale.diagonal_bound, 32)
        self.assertEqual(scale.column_bound, 8)

    def test_caps(self):
        scale = VerifyScale(40)
        self.assertEqual(len(scale.levels), 40)
        self.assertEqual(len(scale.node_levels), 16)
        self.assertEqual(scale.diagonal_bound, 1024)

    def test_monotone(self):
        for depth in range(2, 30):
            small, big = VerifyScale(depth), VerifyScale(depth + 1)
            for name in (
                "diagonal_bound",
                "column_bound",
                "determinant_bound",
                "monotone_bound",
                "coverage_denominator",
                "map_bound",
                "map_columns",
            ):
                self.assertLessEqual(getattr(small, name), getattr(big, name), name)

    def test_rng(self):
        scale = VerifyScale(4, seed=7)
        self.assertEqual(scale.rng("a").random(), scale.rng("a").random())
        self.assertNotEqual(scale.rng("a").random(), scale.rng("b").random())


class TestCheckResult(unittest.TestCase):
    def test_pass(self):
        result = CheckResult("x", "x holds")
        result.record(True)
        result.record(True)
        self.assertEqual(result.status, STATUS_PASS)
        self.assertEqual(result.to_dict()["instances"], 2)
        self.assertIsNone(result.to_dict()["counterexample"])

    def test_first_failure_kept(self):
        result = CheckResult("x", "x holds")
        result.record(False, "first %s", 1)
        result.record(False, "second %s", 2)
        self.assertEqual(result.status, STATUS_FAIL)
        self.assertEqual(result.counterexample, "first 1")

    def test_no_instances(self):
        result = CheckResult("x", "x holds")
        self.assertEqual(result.status, STATUS_FAIL)
        self.assertEqual(result.to_dict()["counterexample"], "no instances checked")

    def test_error(self):
        result = CheckResult("x", "x holds")
        result.error(ValueError("boom"))
        self.assertFalse(result.passed)
        self.assertEqual(result.counterexample, "ValueError: boom")

    def test_observations(self):
        result = CheckResult("x", "x holds")
        self.assertNotIn("observations", result.to_dict())
        result.observe(n=3, value=10 ** 30)
        self.assertEqual(
            result.to_dict()["observations"], [{"n": "3", "value": str(10 ** 30)}]
        )

    def test_render(self):
        self.assertEqual(render((1, 2)), "(1, 2)")
        self.assertEqual(render(2 ** 70), "1180591620717411303424")


class TestRun(unittest.TestCase):
    @parameterized.expand([(name,) for name in (
        "reduced",
        "consecutive-denominators",
        "complexity-square",
        "complexity-trace",
        "level-sum",
        "trace-sum",
        "cf-roundtrip",
        "diagonal-column-oracle",
        "diagonal-constants",
        "stern-diatomic",
        "qmark-children",
        "qmark-diagonal-maps",
    )])
    def test_passes(self, name):
        [result] = run_selected([name])
        self.assertTrue(result.passed, result.to_dict())
        self.assertGreater(result.instances, 0)

    def test_shared_stats_streamed_only(self):
        stats = cached_level_stats(4)
        self.assertIsNone(stats.complexity_product)
        self.assertIsNone(stats.prev_trace_square_sum)
        self.assertEqual(stats.trace_sum, 54)

    def test_children_stream(self):
        for n in range(1, 6):
            self.assertEqual(list(children_stream(n)), list(level_iter(n)))

    def test_consecutive_denominators_catch_bad_successor(self):
        def shifted(r):
            return Fraction(r.den, r.den + 1)

        with patch("cwkit.tree.successor", shifted):
            [result] = run_selected(["consecutive-denominators"])
        self.assertFalse(result.passed)
        self.assertIn("children give", result.counterexample)

    def test_trace_sum_observations(self):
        [result] = run_selected(["trace-sum"], depth=2)
        values = [item["value"] for item in result.observations]
        self.assertEqual(values, ["2", "6"])

    def test_level_sum_observations(self):
        [result] = run_selected(["level-sum"], depth=3)
        self.assertEqual(result.observations[-1], {"n": "3", "value": "11/2"})

    def test_golden(self):
        results = run_selected(["all"], golden=True)
        golden = [result for result in results if result.name.endswith("-golden")]
        self.assertEqual(len(golden), 5)
        for result in golden:
            self.assertTrue(result.passed, result.to_dict())

    def test_everything_passes(self):
        for result in run_selected(None, depth=4):
            self.assertTrue(result.passed, result.to_dict())

    def test_report(self):
        report = VerifyReport(3, run_selected(["reduced", "level-sum"]))
        self.assertTrue(report.passed)
        data = json.loads(report.to_json())
        self.assertEqual(data["depth"], 3)
        self.assertTrue(data["passed"])
        self.assertEqual([c["name"] for c in data["checks"]], ["reduced", "level-sum"])
        self.assertEqual(data["checks"][0]["status"], "pass")

    def test_failing_report(self):
        bad = CheckResult("x", "x holds")
        bad.record(False, "nope")
        report = VerifyReport(2, [bad])
        self.assertFalse(report.passed)
        self.assertEqual(report.to_dict()["checks"][0]["counterexample"], "nope")
