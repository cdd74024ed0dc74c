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
Test plugin discovery.
"""

import unittest

from cwkit import checks, logger
from cwkit.logger.dot import DOTLogger


class TestLoader(unittest.TestCase):
    def test_loggers(self):
        self.assertEqual(sorted(logger.LoggerNames), ["csv", "dot", "json", "text"])
        self.assertIn(DOTLogger, logger.LoggerClasses)
        self.assertIn("'dot'", logger.LoggerKeys)

    def test_private_classes_skipped(self):
        names = [cls.__name__ for cls in logger.LoggerClasses]
        self.assertNotIn("_GraphLogger", names)
        self.assertNotIn("_Logger", names)

    def test_checks(self):
        self.assertEqual(len(checks.CheckClasses), len(set(checks.CheckClasses)))
        self.assertTrue(all(cls.Name for cls in checks.CheckClasses))
        groups = {cls.Group for cls in checks.CheckClasses}
        self.assertEqual(groups, set(checks.GROUPS))
