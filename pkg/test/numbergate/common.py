# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Shared functionality and helpers for the unit tests.
"""

from enum import Enum

import inspect
import logging
import os
import unittest

from numbergate import __path__ as main_path
from numbergate.games import GameArena, parse_game, render_game
from numbergate.provider import RulesetProvider
from numbergate.rulesets import SubtractionRuleset


class Path(Enum):
    """Helper with paths commonly used during the tests."""
    MAIN = main_path[0]
    TEST = os.path.dirname(__file__)


class NumbergateTestCase(unittest.TestCase):
    """Helper class that contains common functionality."""

    @classmethod
    def setUpClass(cls):
        cls.moduleName = os.path.splitext(inspect.getfile(cls))[0]
        cls.log = logging.getLogger(cls.__name__)

        # Set logging to file if the LOG_LEVEL environment variable is set.
        if os.getenv('LOG_LEVEL'):
            # Set up formatter.
            log_fmt = ('{}.%(funcName)s:%(levelname)s:%(asctime)s:'
                       ' %(message)s'.format(cls.__name__))
            formatter = logging.Formatter(log_fmt)

            # Set up the file handler.
            log_file_name = '%s.log' % cls.moduleName
            file_handler = logging.FileHandler(log_file_name)
            file_handler.setFormatter(formatter)
            cls.log.addHandler(file_handler)

            # Set the logging level from the environment variable, defaulting
            # to INFO if it is not a valid level.
            level = logging._nameToLevel.get(os.getenv('LOG_LEVEL'),
                                             logging.INFO)
            cls.log.setLevel(level)

    def setUp(self):
        self.provider = RulesetProvider()
        self.arena = self.provider.arena

    @staticmethod
    def _get_resource_path(filename, path=Path.TEST):
        """ Get the absolute path to a resource.

        Args:
            filename (string): filename or relative path to the resource.
            path (Path): path used as relative to the filename.
        Returns:
            str: the absolute path to the resource.
        """
        return os.path.normpath(os.path.join(path.value, filename))

    def game(self, text, arena=None):
        """Parse a game literal in the test arena."""
        return parse_game(arena or self.arena, text)

    def assertGameEqual(self, first, second, msg=None, arena=None):
        """Assert two GameIds have equal value."""
        # pylint: disable=invalid-name
        arena = arena or self.arena
        if not arena.equal(first, second):
            standard_msg = '{} != {}'.format(render_game(arena, first),
                                             render_game(arena, second))
            self.fail(self._formatMessage(msg, standard_msg))

    def assertGameLess(self, first, second, msg=None, arena=None):
        """Assert first < second in the game order."""
        # pylint: disable=invalid-name
        arena = arena or self.arena
        if arena.compare(first, second) != '<':
            standard_msg = 'not {} < {}'.format(render_game(arena, first),
                                                render_game(arena, second))
            self.fail(self._formatMessage(msg, standard_msg))

    def assertNoViolations(self, report, msg=None):
        """Assert a ClosureReport lists no violated check."""
        # pylint: disable=invalid-name
        if report.violations:
            standard_msg = 'violations on {}: {}'.format(report.ruleset_name,
                                                         report.violations)
            self.fail(self._formatMessage(msg, standard_msg))


def fresh_arena(**options):
    """Return a new GameArena with the given options."""
    return GameArena(options or None)


class OverclaimingSubtraction(SubtractionRuleset):
    """Subtraction that wrongly settles every option pair as F1."""

    def pair_claim(self, position, left, right):
        # pylint: disable=unused-argument
        return 'f1'
