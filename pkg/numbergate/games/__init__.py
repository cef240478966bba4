# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Game module for numbergate.

This module contains the engine for short partizan game forms.

Game Arena
----------
Game forms are interned in a `GameArena` and handled through integer
GameIds. The arena computes the order (`le`, `compare`), outcome classes,
negatives, disjunctive sums, birthdays and canonical forms, and extracts
exact values (`to_number`) for games that are numbers.

Numbers
-------
Values of numbers are exact `DyadicRational` objects. `simplest_between`
implements the simplicity rule and `numbers_born_by` lists the numbers
born by a given day.

Literals
--------
`parse_game` and `render_game` convert between GameIds and the brace
notation, e.g. "{0,*|*}" or "1/2".
"""

from .gameerror import GameError, GameParseError
from .dyadic import DyadicRational, simplest_between, numbers_born_by
from .arena import GameArena, Outcome
from .literal import parse_game, render_game
from .generate import random_game
