# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Blue-red hackenbush strings.
"""

import re
from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

_POSITION_RE = re.compile(r'[BR]*\Z')


@dataclass(frozen=True)
class HackenbushString:
    """Edge colors from the ground upward, 'B' blue and 'R' red."""
    edges: str


class HackenbushRuleset(Ruleset):
    """Blue-red hackenbush on a single string.

    Left removes a blue edge, Right a red one; every edge above the removed
    one falls with it.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'hackenbush',
        'description': 'blue-red hackenbush strings, ground first',
        'seed_grammar': 'string over b/r, case-insensitive, ground first',
        'position_type': 'HackenbushString'
    }

    def parse_position(self, text):
        edges = text.strip().upper()
        if not _POSITION_RE.match(edges):
            raise RulesetError("Invalid hackenbush position \"{}\": expected a "
                               "string over b and r.".format(text))
        return HackenbushString(edges)

    def render_position(self, position):
        return position.edges.lower()

    def left_moves(self, position):
        return self._cuts(position, 'B')

    def right_moves(self, position):
        return self._cuts(position, 'R')

    @staticmethod
    def _cuts(position, color):
        return [HackenbushString(position.edges[:height])
                for height, edge in enumerate(position.edges)
                if edge == color]

    @staticmethod
    def flip_colors(position):
        """Return the string with every edge color exchanged."""
        return HackenbushString(position.edges.translate(str.maketrans('BR', 'RB')))
