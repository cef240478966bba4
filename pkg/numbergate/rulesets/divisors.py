# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Divisors: Left shrinks l to a divisor of r, Right shrinks r to a divisor of l.
"""

import re
from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

_POSITION_RE = re.compile(r'\s*(\d+)\s*,\s*(\d+)\s*\Z')


@dataclass(frozen=True)
class DivisorsPosition:
    """An ordered pair (l, r) of positive integers."""
    left: int
    right: int


class DivisorsRuleset(Ruleset):
    """Divisors ruleset.

    Left replaces (l, r) by (l', r) where l' < l divides r. Right replaces
    (l, r) by (l, r') where r' < r divides l.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'divisors',
        'description': 'pairs (l, r); Left moves l to a smaller divisor of r, '
                       'Right moves r to a smaller divisor of l',
        'seed_grammar': 'l,r',
        'position_type': 'DivisorsPosition'
    }

    def parse_position(self, text):
        match = _POSITION_RE.match(text)
        if match is None:
            raise RulesetError("Invalid divisors position \"{}\": expected "
                               "\"l,r\".".format(text))
        position = DivisorsPosition(int(match.group(1)), int(match.group(2)))
        if position.left < 1 or position.right < 1:
            raise RulesetError("Invalid divisors position \"{}\": entries must "
                               "be positive.".format(text))
        return position

    def render_position(self, position):
        return "{},{}".format(position.left, position.right)

    def left_moves(self, position):
        return [DivisorsPosition(div, position.right)
                for div in range(1, position.left)
                if position.right % div == 0]

    def right_moves(self, position):
        return [DivisorsPosition(position.left, div)
                for div in range(1, position.right)
                if position.left % div == 0]

    def pair_claim(self, position, left, right):
        """F1 when l' = r or l = r', F2 otherwise."""
        if left.left == position.right or position.left == right.right:
            return 'f1'
        return 'f2'
