# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Cutcake: sums of rectangular boards cut along grid lines.

A board m x n has m rows and n columns. Left cuts a board between two
columns, Right between two rows; a 1 x 1 board cannot be cut.
"""

import re
from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

_BOARD_RE = re.compile(r'\s*(\d+)\s*[xX]\s*(\d+)\s*\Z')


@dataclass(frozen=True)
class CutcakeSum:
    """A multiset of boards (m, n), stored sorted."""
    boards: tuple

    @classmethod
    def of(cls, boards):
        """Return the sum of the given boards."""
        return cls(tuple(sorted(tuple(board) for board in boards)))


class CutcakeRuleset(Ruleset):
    """Cutcake.

    Left replaces a board m x n by m x l and m x (n - l); Right replaces it
    by r x n and (m - r) x n. Boards are never transposed: m x n and n x m
    are different boards.

    Closures and game forms work on normalized sums, see
    `normalize_position`.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'cutcake',
        'description': 'sums of m x n boards; Left cuts columns apart, Right rows',
        'seed_grammar': 'MxN or MxN+MxN',
        'position_type': 'CutcakeSum'
    }

    def parse_position(self, text):
        boards = []
        for part in text.split('+'):
            match = _BOARD_RE.match(part)
            if match is None:
                raise RulesetError("Invalid cutcake position \"{}\": expected "
                                   "\"MxN\" terms joined by \"+\".".format(text))
            board = (int(match.group(1)), int(match.group(2)))
            if board[0] < 1 or board[1] < 1:
                raise RulesetError("Invalid cutcake position \"{}\": board sides "
                                   "must be positive.".format(text))
            boards.append(board)
        return CutcakeSum.of(boards)

    def render_position(self, position):
        return '+'.join("{}x{}".format(m, n) for m, n in position.boards)

    def normalize_position(self, position):
        """Merge strips and drop empty boards.

        A 1 x n board only ever gives Left n - 1 moves and an m x 1 board
        only gives Right m - 1, and every order of those moves ends after
        the same count. All 1 x n boards of a sum therefore merge into one
        1 x (c + 1) board holding their c moves, all m x 1 boards into one
        (c + 1) x 1 board, and 1 x 1 boards drop out; the game form does
        not change. The empty sum is kept as the single board 1 x 1.
        """
        boards = []
        row_moves = column_moves = 0
        for m, n in position.boards:
            if m == 1:
                row_moves += n - 1
            elif n == 1:
                column_moves += m - 1
            else:
                boards.append((m, n))
        if row_moves:
            boards.append((1, row_moves + 1))
        if column_moves:
            boards.append((column_moves + 1, 1))
        if not boards:
            boards.append((1, 1))
        return CutcakeSum.of(boards)

    def left_moves(self, position):
        return self._cuts(position, lambda m, n, k: ((m, k), (m, n - k)),
                          lambda m, n: n)

    def right_moves(self, position):
        return self._cuts(position, lambda m, n, k: ((k, n), (m - k, n)),
                          lambda m, n: m)

    @staticmethod
    def _cuts(position, pieces, side):
        moves = {}
        boards = position.boards
        for index, (m, n) in enumerate(boards):
            if index > 0 and boards[index - 1] == (m, n):
                continue
            rest = boards[:index] + boards[index + 1:]
            for k in range(1, side(m, n) // 2 + 1):
                moves.setdefault(CutcakeSum.of(rest + pieces(m, n, k)), None)
        return list(moves)
