# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Rulesets for numbergate.

Each ruleset turns positions of a concrete game into game forms behind one
interface: `parse_position`, `render_position`, `left_moves`, `right_moves`
and `to_game`.

   divisors      pairs (l, r) of positive integers
   turtles       partizan turning turtles
   chomp         polychromatic chomp
   cutcake       sums of cutcake boards
   hackenbush    blue-red hackenbush strings
   subtraction   partizan subtraction on one heap
   game          plain game forms given as literals
"""

from .rulesetserror import RulesetError
from .ruleset import Ruleset
from .divisors import DivisorsRuleset, DivisorsPosition
from .turtles import TurtlesRuleset, TurtleLine
from .chomp import ChompRuleset, ChompGrid
from .cutcake import CutcakeRuleset, CutcakeSum
from .hackenbush import HackenbushRuleset, HackenbushString
from .subtraction import SubtractionRuleset, SubtractionPosition
from .game_forms import GameFormRuleset
