# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Numbergate: short partizan games and the F1 / F2 properties."""

from .gateerror import NumbergateError, BudgetExceededError
from .games import (GameArena, Outcome, DyadicRational, GameError,
                    GameParseError, parse_game, render_game)
from .rulesets import Ruleset, RulesetError
from .properties import (PairClassification, ClosureReport, classify_pair,
                         hcr_closure, check_closure, confirm_con,
                         number_avoidance_probe)
from .provider import RulesetProvider
from .checkjob import CheckJob, CheckJobError, JobStatus
from . import utils
from .version import __version__

# Global instance to be used as the entry point for convenience.
Numbergate = RulesetProvider()  # pylint: disable=invalid-name
