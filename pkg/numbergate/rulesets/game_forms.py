# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Game forms as positions.

Positions are GameIds and moves are the options of the stored form, so any
game literal can be checked like a board position.
"""

from ..games.literal import parse_game, render_game
from .ruleset import Ruleset


class GameFormRuleset(Ruleset):
    """Ruleset whose positions are game forms of its arena."""

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'game',
        'description': 'game forms; moves are the options of the form',
        'seed_grammar': 'game literal, e.g. {0,*|*}',
        'position_type': 'GameId'
    }

    def parse_position(self, text):
        return parse_game(self.arena, text)

    def render_position(self, position):
        return render_game(self.arena, position)

    def left_moves(self, position):
        return list(self.arena.left_options(position))

    def right_moves(self, position):
        return list(self.arena.right_options(position))

    def to_game(self, position):
        # The lookup validates the id
        self.arena.birthday(position)
        return position
