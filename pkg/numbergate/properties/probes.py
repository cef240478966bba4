# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Probes relating outcomes to numbers.

`confirm_con` checks, over a hereditary closure, that sums with numbers are
never first-player wins exactly when the closure consists of numbers.
`number_avoidance_probe` checks that when a number G is summed with a
non-number H, the player who wins moving first can do so on H.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from ..games.arena import Outcome
from ..games.dyadic import numbers_born_by
from ..games.gameerror import GameError

logger = logging.getLogger(__name__)

#: Default numbers summed with every closure position.
DEFAULT_X_SET = tuple(numbers_born_by(3))

NO_N_SUM = 'no-n-sum'
N_SUM_FOUND = 'n-sum-found'
WITNESS_FOUND = 'witness-found'
NO_WITNESS = 'no-witness-in-searched-set'


@dataclass
class ConVerdict:
    """Result of the outcomes-and-numbers probe.

    Attributes:
        all_numbers (bool): every position of the closure is a number.
        verdict (str): 'no-n-sum' or 'n-sum-found' when the closure is all
            numbers, otherwise 'witness-found' or
            'no-witness-in-searched-set'.
        witness (dict or None): the position and number of a sum in N.
        forward_violations (list): N-sums found in an all-number closure.
        searched (int): number of sums whose outcome was computed.
    """
    all_numbers: bool
    verdict: str
    witness: Optional[dict] = None
    forward_violations: list = field(default_factory=list)
    searched: int = 0

    @property
    def violated(self):
        """True if a number sum landed in N inside an all-number closure."""
        return bool(self.forward_violations)

    def to_dict(self):
        """Return the verdict as a dictionary."""
        return {
            'all_numbers': self.all_numbers,
            'verdict': self.verdict,
            'witness': self.witness,
            'forward_violations': list(self.forward_violations),
            'searched': self.searched
        }


@dataclass
class AvoidanceVerdict:
    """Result of the number avoidance probe on G + H.

    A side passes when it does not win moving first, or when it has a
    winning move on H. Witnesses are GameIds of the chosen option of H.
    """
    left_wins_first: bool
    left_witness: Optional[int]
    right_wins_first: bool
    right_witness: Optional[int]

    @property
    def passed(self):
        """True if every side that wins moving first can win on H."""
        left_ok = not self.left_wins_first or self.left_witness is not None
        right_ok = not self.right_wins_first or self.right_witness is not None
        return left_ok and right_ok

    def to_dict(self, render=None):
        """Return the verdict as a dictionary, rendering witnesses with
        `render` when given."""
        if render is None:
            render = int

        def _show(gid):
            return None if gid is None else render(gid)

        return {
            'left_wins_first': self.left_wins_first,
            'left_witness': _show(self.left_witness),
            'right_wins_first': self.right_wins_first,
            'right_witness': _show(self.right_witness),
            'passed': self.passed
        }


def _simplest_first(numbers):
    """Order numbers by birthday, then magnitude, positive before negative."""
    return sorted(numbers, key=lambda x: (x.birthday(), -x if x < 0 else x, x < 0))


def _converse_candidates(arena, canonical, x_set):
    """Numbers to try against a non-number canonical form, x_set first."""
    candidates = _simplest_first(x_set)
    left = [arena.to_number(opt) for opt in arena.left_options(canonical)]
    right = [arena.to_number(opt) for opt in arena.right_options(canonical)]
    left = [val for val in left if val is not None]
    right = [val for val in right if val is not None]
    for val in left + right:
        candidates.append(-val)
    for lo in left:
        for hi in right:
            candidates.append(-lo.mean(hi))
    return list(dict.fromkeys(candidates))


def con_verdict(ruleset, positions, x_set=None):
    """Run the outcomes-and-numbers probe on closure positions.

    Args:
        ruleset (Ruleset): ruleset owning the positions.
        positions (list): the closure, in closure order.
        x_set (iterable or None): numbers to sum with (Default: the numbers
            born by day 3).

    Returns:
        ConVerdict: the probe result.
    """
    arena = ruleset.arena
    if x_set is None:
        x_set = DEFAULT_X_SET
    x_set = list(x_set)
    forms = {}
    for pos in positions:
        forms[pos] = arena.canonical_form(ruleset.to_game(pos))
    non_numbers = [pos for pos in positions if arena.to_number(forms[pos]) is None]
    searched = 0

    if not non_numbers:
        violations = []
        for pos in positions:
            for val in x_set:
                searched += 1
                total = arena.sum(forms[pos], arena.number_to_game(val))
                if arena.outcome(total) is Outcome.N:
                    violations.append({'position': ruleset.render_position(pos),
                                       'x': str(val)})
        verdict = N_SUM_FOUND if violations else NO_N_SUM
        if violations:
            logger.error("%d number sums in N on %s although every position "
                         "is a number.", len(violations), ruleset.name())
        return ConVerdict(True, verdict, None, violations, searched)

    for pos in non_numbers:
        for val in _converse_candidates(arena, forms[pos], x_set):
            searched += 1
            total = arena.sum(forms[pos], arena.number_to_game(val))
            if arena.outcome(total) is Outcome.N:
                witness = {'position': ruleset.render_position(pos),
                           'x': str(val), 'outcome': Outcome.N.value}
                logger.info("Found N-sum %s + %s on %s after %d sums.",
                            witness['position'], val, ruleset.name(), searched)
                return ConVerdict(False, WITNESS_FOUND, witness, [], searched)
    logger.info("No N-sum among %d sums on %s.", searched, ruleset.name())
    return ConVerdict(False, NO_WITNESS, None, [], searched)


def confirm_con(ruleset, seeds, options=None):
    """Probe outcomes of number sums over the hereditary closure of `seeds`.

    Args:
        ruleset (Ruleset): the ruleset.
        seeds (list): positions or position texts.
        options (dict): closure options; "x_set" and "max_positions" are used.

    Returns:
        ConVerdict: the probe result.

    Raises:
        BudgetExceededError: if the closure exceeds its budget.
    """
    # pylint: disable=cyclic-import
    from .closure import hcr_closure, closure_options
    options = closure_options(options)
    positions = hcr_closure(ruleset, seeds, options)
    return con_verdict(ruleset, positions, options['x_set'])


def number_avoidance_probe(arena, g_number, h):
    """Check that the first-player winner of G + H can win with a move on H.

    Args:
        arena (GameArena): the arena holding the forms.
        g_number (int): GameId of a number G.
        h (int): GameId of a non-number H.

    Returns:
        AvoidanceVerdict: who wins moving first and their moves on H.

    Raises:
        GameError: if G is not a number or H is one.
    """
    if arena.to_number(g_number) is None:
        raise GameError("Avoidance probe needs a number, got GameId {}.".format(g_number))
    if arena.to_number(h) is not None:
        raise GameError("Avoidance probe needs a non-number, got GameId {}.".format(h))
    total = arena.sum(g_number, h)
    left_first = arena.left_wins_first(total)
    right_first = arena.right_wins_first(total)
    left_witness = None
    if left_first:
        for opt in arena.left_options(h):
            if arena.le(arena.zero, arena.sum(g_number, opt)):
                left_witness = opt
                break
    right_witness = None
    if right_first:
        for opt in arena.right_options(h):
            if arena.le(arena.sum(g_number, opt), arena.zero):
                right_witness = opt
                break
    verdict = AvoidanceVerdict(left_first, left_witness, right_first, right_witness)
    if not verdict.passed:
        logger.error("Number avoidance failed for GameIds %d + %d.", g_number, h)
    return verdict
