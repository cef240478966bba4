# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
F1 / F2 classification of option pairs.

For a game G with Left option G^L and Right option G^R:

    F1 holds if some Left option of G^R is >= G^L, or some Right option of
       G^L is <= G^R.
    F2 holds if some Right option of G^L is <= some Left option of G^R.

Both properties are decided by value comparison. When the options come from
ruleset positions, literal identity of positions decides a clause without
any comparison (identical positions have identical forms).

F1 fails exactly when G^R <= G^L, so it depends on the values of the two
options only. F2 also depends on their option sets and can change when G^L
or G^R is replaced by its canonical form.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..games.gameerror import GameError

logger = logging.getLogger(__name__)

#: F1 witness tags: a Left option of G^R that is >= G^L, or a Right option
#: of G^L that is <= G^R.
RIGHT_LEFT = 'RL'
LEFT_RIGHT = 'LR'


@dataclass(frozen=True)
class PairClassification:
    """F1 / F2 verdicts for one pair (G^L, G^R).

    Attributes:
        left_option (int): GameId of G^L.
        right_option (int): GameId of G^R.
        f1 (bool): the pair satisfies F1.
        f1_witness (tuple or None): (tag, GameId) with tag 'RL' for a
            G^RL >= G^L or 'LR' for a G^LR <= G^R.
        f2 (bool): the pair satisfies F2.
        f2_witness (tuple or None): (G^LR, G^RL) GameIds with G^RL >= G^LR.
        f1_strict (bool): the F1 witness inequality is strict.
        fast_path (tuple): clauses ('f1', 'f2') decided by position identity.
    """
    left_option: int
    right_option: int
    f1: bool
    f1_witness: Optional[tuple]
    f2: bool
    f2_witness: Optional[tuple]
    f1_strict: bool
    fast_path: tuple = ()

    @property
    def kind(self):
        """One of 'both', 'f1-only', 'f2-only', 'neither'."""
        if self.f1 and self.f2:
            return 'both'
        if self.f1:
            return 'f1-only'
        if self.f2:
            return 'f2-only'
        return 'neither'

    def to_dict(self, render=None):
        """Return the classification as a dictionary.

        Args:
            render (callable): maps a GameId to text (Default: the id).
        """
        if render is None:
            render = int
        f1_witness = None
        if self.f1_witness is not None:
            f1_witness = {'side': self.f1_witness[0],
                          'option': render(self.f1_witness[1])}
        f2_witness = None
        if self.f2_witness is not None:
            f2_witness = {'left_right': render(self.f2_witness[0]),
                          'right_left': render(self.f2_witness[1])}
        return {
            'left_option': render(self.left_option),
            'right_option': render(self.right_option),
            'f1': self.f1,
            'f1_witness': f1_witness,
            'f1_strict': self.f1_strict,
            'f2': self.f2,
            'f2_witness': f2_witness,
            'fast_path': list(self.fast_path)
        }


def _value_le(arena, g, h):
    """Compare by value through canonical forms."""
    return arena.le(arena.canonical_form(g), arena.canonical_form(h))


def _search_f1(arena, gl, gr):
    """Return (found, witness, strict), preferring a strict witness."""
    witness = None
    strict = False
    for opt in arena.left_options(gr):
        if _value_le(arena, gl, opt):
            is_strict = not _value_le(arena, opt, gl)
            if witness is None or is_strict:
                witness, strict = (RIGHT_LEFT, opt), is_strict
            if strict:
                return True, witness, True
    for opt in arena.right_options(gl):
        if _value_le(arena, opt, gr):
            is_strict = not _value_le(arena, gr, opt)
            if witness is None or is_strict:
                witness, strict = (LEFT_RIGHT, opt), is_strict
            if strict:
                return True, witness, True
    return witness is not None, witness, strict


def _search_f2(arena, gl, gr):
    """Return (found, witness)."""
    for left_right in arena.right_options(gl):
        for right_left in arena.left_options(gr):
            if _value_le(arena, left_right, right_left):
                return True, (left_right, right_left)
    return False, None


def classify_options(arena, gl, gr):
    """Classify the pair (gl, gr) by value comparison alone."""
    f1, f1_witness, f1_strict = _search_f1(arena, gl, gr)
    f2, f2_witness = _search_f2(arena, gl, gr)
    return PairClassification(gl, gr, f1, f1_witness, f2, f2_witness, f1_strict)


def classify_pair(arena, g, gl, gr):
    """Classify the option pair (gl, gr) of g.

    Args:
        arena (GameArena): the arena holding the forms.
        g (int): GameId of the game.
        gl (int): a Left option of g.
        gr (int): a Right option of g.

    Returns:
        PairClassification: verdicts and witnesses.

    Raises:
        GameError: if gl is not a Left option or gr not a Right option of g.
    """
    if gl not in arena.left_options(g):
        raise GameError("GameId {} is not a Left option of {}.".format(gl, g))
    if gr not in arena.right_options(g):
        raise GameError("GameId {} is not a Right option of {}.".format(gr, g))
    return classify_options(arena, gl, gr)


def classify_game(arena, g):
    """Classify every option pair of g, Left options major."""
    return [classify_options(arena, gl, gr)
            for gl in arena.left_options(g)
            for gr in arena.right_options(g)]


def classify_position_pair(ruleset, left_position, right_position, fast_path=True):
    """Classify a pair of ruleset positions (G^l, G^r).

    With `fast_path` a clause holds without comparison when G^l is a Left
    move of G^r or G^r is a Right move of G^l (F1), or when some position
    is both a Right move of G^l and a Left move of G^r (F2). Positions are
    compared after `Ruleset.normalize_position`. Clauses that identity does
    not settle are decided by value comparison.

    Returns:
        PairClassification: verdicts with GameId witnesses.
    """
    arena = ruleset.arena
    gl = ruleset.to_game(left_position)
    gr = ruleset.to_game(right_position)
    if not fast_path:
        return classify_options(arena, gl, gr)
    left_position = ruleset.normalize_position(left_position)
    right_position = ruleset.normalize_position(right_position)
    decided = []
    left_then_right = ruleset.options(left_position)[1]
    right_then_left = ruleset.options(right_position)[0]
    if left_position in right_then_left:
        f1, f1_witness, f1_strict = True, (RIGHT_LEFT, gl), False
        decided.append('f1')
    elif right_position in left_then_right:
        f1, f1_witness, f1_strict = True, (LEFT_RIGHT, gr), False
        decided.append('f1')
    else:
        f1, f1_witness, f1_strict = _search_f1(arena, gl, gr)
    reachable = set(right_then_left)
    common = next((pos for pos in left_then_right if pos in reachable), None)
    if common is not None:
        common_game = ruleset.to_game(common)
        f2, f2_witness = True, (common_game, common_game)
        decided.append('f2')
    else:
        f2, f2_witness = _search_f2(arena, gl, gr)
    return PairClassification(gl, gr, f1, f1_witness, f2, f2_witness, f1_strict,
                              tuple(decided))


def validate_witnesses(arena, classification):
    """Re-check the recorded witnesses with direct `le` calls.

    Returns:
        bool: True if every recorded witness satisfies its inequality and
        the verdict flags agree with the presence of witnesses.
    """
    gl, gr = classification.left_option, classification.right_option
    if classification.f1 != (classification.f1_witness is not None):
        return False
    if classification.f2 != (classification.f2_witness is not None):
        return False
    if classification.f1_witness is not None:
        side, opt = classification.f1_witness
        if side == RIGHT_LEFT:
            if opt not in arena.left_options(gr) or not arena.le(gl, opt):
                return False
            if classification.f1_strict and arena.le(opt, gl):
                return False
        elif side == LEFT_RIGHT:
            if opt not in arena.right_options(gl) or not arena.le(opt, gr):
                return False
            if classification.f1_strict and arena.le(gr, opt):
                return False
        else:
            return False
    if classification.f2_witness is not None:
        left_right, right_left = classification.f2_witness
        if left_right not in arena.right_options(gl):
            return False
        if right_left not in arena.left_options(gr):
            return False
        if not arena.le(left_right, right_left):
            return False
    return True
