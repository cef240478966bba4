# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Partizan subtraction on a single heap.
"""

import re
from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

_POSITION_RE = re.compile(
    r'\s*n\s*=\s*(\d+)\s*;\s*L\s*=\s*([\d,\s]*);\s*R\s*=\s*([\d,\s]*)\Z')


@dataclass(frozen=True)
class SubtractionPosition:
    """A heap together with the subtraction sets of both players."""
    heap: int
    left_set: tuple
    right_set: tuple


def _parse_set(text, source):
    values = [part.strip() for part in text.split(',') if part.strip()]
    try:
        numbers = sorted({int(value) for value in values})
    except ValueError:
        raise RulesetError("Invalid subtraction set in \"{}\".".format(source))
    if any(number < 1 for number in numbers):
        raise RulesetError("Invalid subtraction position \"{}\": subtraction "
                           "amounts must be positive.".format(source))
    return tuple(numbers)


class SubtractionRuleset(Ruleset):
    """Partizan subtraction.

    Left removes l tokens from the heap for some l in S_L, Right removes r
    tokens for some r in S_R; nobody may remove more than the heap holds.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'subtraction',
        'description': 'single heap; Left subtracts from S_L, Right from S_R',
        'seed_grammar': 'n=5;L=1,3;R=2',
        'position_type': 'SubtractionPosition'
    }

    def parse_position(self, text):
        match = _POSITION_RE.match(text)
        if match is None:
            raise RulesetError("Invalid subtraction position \"{}\": expected "
                               "\"n=5;L=1,3;R=2\".".format(text))
        return SubtractionPosition(int(match.group(1)),
                                   _parse_set(match.group(2), text),
                                   _parse_set(match.group(3), text))

    def render_position(self, position):
        return "n={};L={};R={}".format(
            position.heap, ','.join(str(k) for k in position.left_set),
            ','.join(str(k) for k in position.right_set))

    def left_moves(self, position):
        return self._subtract(position, position.left_set)

    def right_moves(self, position):
        return self._subtract(position, position.right_set)

    @staticmethod
    def _subtract(position, amounts):
        return [SubtractionPosition(position.heap - amount, position.left_set,
                                    position.right_set)
                for amount in amounts if amount <= position.heap]

    def pair_claim(self, position, left, right):
        """F2 when the heap holds both amounts."""
        taken = (position.heap - left.heap) + (position.heap - right.heap)
        if taken <= position.heap:
            return 'f2'
        return None
