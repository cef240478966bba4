# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Partizan turning turtles on a line of turtles.
"""

import re
from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

_POSITION_RE = re.compile(r'[UD]*\Z')


@dataclass(frozen=True)
class TurtleLine:
    """A line of turtles, 'U' on its feet and 'D' on its back."""
    turtles: str


class TurtlesRuleset(Ruleset):
    """Partizan turning turtles.

    Left turns two turtles that are on their backs onto their feet. Right
    turns over a pair whose leftmost turtle is on its feet and whose other
    turtle is on its back.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'turtles',
        'description': 'line of turtles; Left rights two upside-down turtles, '
                       'Right flips a standing turtle and a later upside-down one',
        'seed_grammar': 'UDDU',
        'position_type': 'TurtleLine'
    }

    def parse_position(self, text):
        turtles = text.strip().upper()
        if not _POSITION_RE.match(turtles):
            raise RulesetError("Invalid turtles position \"{}\": expected a "
                               "string over U and D.".format(text))
        return TurtleLine(turtles)

    def render_position(self, position):
        return position.turtles

    def left_moves(self, position):
        return self._flips(position.turtles, 'D', 'D')

    def right_moves(self, position):
        return self._flips(position.turtles, 'U', 'D')

    @staticmethod
    def _flips(turtles, first, second):
        flip = {'U': 'D', 'D': 'U'}
        moves = []
        for i, turtle_i in enumerate(turtles):
            if turtle_i != first:
                continue
            for j in range(i + 1, len(turtles)):
                if turtles[j] != second:
                    continue
                line = list(turtles)
                line[i] = flip[line[i]]
                line[j] = flip[line[j]]
                moves.append(TurtleLine(''.join(line)))
        return moves

    def pair_claim(self, position, left, right):
        """F1 when the two moves turn a common turtle, F2 otherwise."""
        def _turned(line):
            return {i for i, (old, new) in enumerate(zip(position.turtles, line.turtles))
                    if old != new}
        if _turned(left) & _turned(right):
            return 'f1'
        return 'f2'
