# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Polychromatic chomp on a staircase grid with a poison square.

Coordinates are 1-based: rows count upwards from the bottom and columns
rightwards from the left; the poison square is cell (1, 1).

Seed grammar: rows from top to bottom separated by "/", each row a string of
cell colors starting at column 1 ("B" black, "G" gray). The bottom row starts
at column 2 because the poison square is implicit. Lower case letters are
cells that have already been removed; they keep their color so a position
renders back to the same text.

    "BG/GB"   top row: B at (2,1), G at (2,2); bottom row: P, G, B
    "B"       a 1x2 grid with a black square right of the poison
    ""        the poison square alone
"""

from dataclasses import dataclass

from .ruleset import Ruleset
from .rulesetserror import RulesetError

POISON = 'P'
BLACK = 'B'
GRAY = 'G'


@dataclass(frozen=True)
class ChompGrid:
    """A chomp position.

    Attributes:
        heights (tuple[int]): column heights, non-increasing, first >= 1.
        colors (tuple[str]): colors of the original grid, one string per row
            from the bottom up; row 1 starts with the poison square. Colors
            of removed cells are retained.
    """
    heights: tuple
    colors: tuple

    @property
    def width(self):
        """Number of columns of the original grid."""
        return len(self.heights)

    def present(self, row, column):
        """Return True if cell (row, column) is still on the board."""
        return row <= self.heights[column - 1]


class ChompRuleset(Ruleset):
    """Polychromatic chomp.

    Left chooses a black square and removes it with every square above it
    or to its right; Right does the same with a gray square. Nobody may
    take the poison square.
    """

    DEFAULT_CONFIGURATION = {
        'ruleset_name': 'chomp',
        'description': 'staircase grid of black/gray squares with a poison '
                       'square at the lower left; Left takes black, Right gray',
        'seed_grammar': 'rows top-to-bottom of B|G separated by /, poison '
                        'implicit at the start of the bottom row',
        'position_type': 'ChompGrid'
    }

    def parse_position(self, text):
        rows = [row.strip() for row in text.strip().split('/')]
        rows.reverse()
        rows[0] = POISON + rows[0]
        for pos, row in enumerate(rows):
            if not row:
                raise RulesetError("Invalid chomp position \"{}\": row {} is "
                                   "empty.".format(text, pos + 1))
            if pos > 0 and len(row) > len(rows[pos - 1]):
                raise RulesetError("Invalid chomp position \"{}\": row {} is "
                                   "longer than the row below.".format(text, pos + 1))
            if any(cell not in 'BGbg' for cell in row[1 if pos == 0 else 0:]):
                raise RulesetError("Invalid chomp position \"{}\": cells must be "
                                   "B, G, b or g.".format(text))
        width = len(rows[0])
        heights = []
        for column in range(width):
            cells = [row[column] for row in rows if column < len(row)]
            present = [cell.isupper() for cell in cells]
            height = sum(present)
            if present != [True] * height + [False] * (len(cells) - height):
                raise RulesetError("Invalid chomp position \"{}\": column {} has "
                                   "a gap.".format(text, column + 1))
            heights.append(height)
        if any(heights[k] < heights[k + 1] for k in range(width - 1)):
            raise RulesetError("Invalid chomp position \"{}\": removed cells do "
                               "not form a staircase.".format(text))
        return ChompGrid(tuple(heights), tuple(row.upper() for row in rows))

    def render_position(self, position):
        rows = []
        for row_index, row in enumerate(position.colors):
            cells = []
            for column, color in enumerate(row):
                if row_index == 0 and column == 0:
                    continue
                if position.present(row_index + 1, column + 1):
                    cells.append(color)
                else:
                    cells.append(color.lower())
            rows.append(''.join(cells))
        rows.reverse()
        return '/'.join(rows)

    def left_moves(self, position):
        return self._chomps(position, BLACK)

    def right_moves(self, position):
        return self._chomps(position, GRAY)

    @staticmethod
    def _chomps(position, color):
        moves = []
        for column in range(1, position.width + 1):
            for row in range(1, position.heights[column - 1] + 1):
                if position.colors[row - 1][column - 1] != color:
                    continue
                heights = tuple(
                    height if k < column else min(height, row - 1)
                    for k, height in enumerate(position.heights, start=1))
                moves.append(ChompGrid(heights, position.colors))
        return moves

    @staticmethod
    def swap_colors(position):
        """Return the position with black and gray exchanged on every cell."""
        swap = {BLACK: GRAY, GRAY: BLACK, POISON: POISON}
        colors = tuple(''.join(swap[cell] for cell in row)
                       for row in position.colors)
        return ChompGrid(position.heights, colors)
