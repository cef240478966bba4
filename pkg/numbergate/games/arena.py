# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Hash-consed arena of short partizan game forms.
"""

import logging
import sys
import threading
from enum import Enum

from ..gateerror import BudgetExceededError
from ..utils.helpers import merge_options
from .dyadic import DyadicRational, simplest_between
from .gameerror import GameError

logger = logging.getLogger(__name__)

_MISSING = object()


class Outcome(Enum):
    """Outcome class of a game under perfect play."""
    L = 'L'
    R = 'R'
    P = 'P'
    N = 'N'


class GameArena:
    """Append-only store of interned game forms.

    A game form is a pair of option sets. Each form is interned once and
    identified by a dense non-negative integer id (its GameId); two forms
    with the same options, up to order and duplication, get the same id.
    Options are always interned before the forms that use them, so ids
    strictly increase along every option edge.

    Arena options:

        * "max_arena" (int): maximum number of interned forms. Interning
          beyond it raises BudgetExceededError (Default: 5000000).

        * "max_depth" (int): maximum recursion depth of a single operation,
          measured as the sum of the birthdays of its operands. Deeper
          requests raise BudgetExceededError (Default: 200).

    All derived results (order, outcomes, sums, negatives, canonical forms,
    numbers) are memoized and never invalidated.
    """

    DEFAULT_OPTIONS = {
        'max_arena': 5000000,
        'max_depth': 200
    }

    def __init__(self, options=None):
        self._options = merge_options(self.DEFAULT_OPTIONS, options,
                                      owner='arena')
        for key in ('max_arena', 'max_depth'):
            val = self._options[key]
            if not isinstance(val, int) or val < 1:
                raise GameError("Invalid {}: must be a positive "
                                "integer.".format(key))
        # Each level of recursion uses a couple of interpreter frames
        frames = 4 * self._options['max_depth'] + 500
        if sys.getrecursionlimit() < frames:
            sys.setrecursionlimit(frames)
        self._left = []
        self._right = []
        self._birthday = []
        self._index = {}
        self._lock = threading.Lock()
        self._warned = False
        self._le_cache = {}
        self._outcome_cache = {}
        self._neg_cache = {}
        self._sum_cache = {}
        self._canonical_cache = {}
        self._number_cache = {}
        self._number_forms = {}
        self.zero = self.make_game((), ())
        self.star = self.make_game((self.zero,), (self.zero,))
        self.one = self.number_to_game(DyadicRational(1))

    def __len__(self):
        """Return the number of interned forms."""
        return len(self._left)

    def __repr__(self):
        return "GameArena(forms={}, max_arena={})".format(
            len(self), self._options['max_arena'])

    @property
    def options(self):
        """Return a copy of the arena options."""
        return dict(self._options)

    # Construction

    def make_game(self, left, right):
        """Intern the form {left | right} and return its GameId.

        Args:
            left (iterable[int]): Left option ids.
            right (iterable[int]): Right option ids.

        Returns:
            int: the GameId, identical for equal option sets.

        Raises:
            GameError: if an option id is not interned.
            BudgetExceededError: if the arena is full.
        """
        left = self._option_tuple(left)
        right = self._option_tuple(right)
        key = (left, right)
        gid = self._index.get(key)
        if gid is not None:
            return gid
        with self._lock:
            gid = self._index.get(key)
            if gid is not None:
                return gid
            gid = len(self._left)
            limit = self._options['max_arena']
            if gid >= limit:
                raise BudgetExceededError(
                    "Arena budget exceeded: {} forms.".format(limit),
                    budget='max_arena', limit=limit)
            if not self._warned and gid >= 0.9 * limit:
                self._warned = True
                logger.warning("Arena holds %d forms, close to its cap of %d.",
                               gid, limit)
            days = [self._birthday[x] for x in left + right]
            self._left.append(left)
            self._right.append(right)
            self._birthday.append(1 + max(days) if days else 0)
            self._index[key] = gid
        return gid

    def _option_tuple(self, options):
        options = tuple(sorted(set(options)))
        size = len(self._left)
        for opt in options:
            if not isinstance(opt, int) or opt < 0 or opt >= size:
                raise GameError("Unknown GameId {}.".format(opt))
        return options

    def _check_ids(self, *games):
        size = len(self._left)
        for gid in games:
            if not isinstance(gid, int) or gid < 0 or gid >= size:
                raise GameError("Unknown GameId {}.".format(gid))

    def _check_depth(self, *games):
        depth = sum(self._birthday[gid] for gid in games)
        limit = self._options['max_depth']
        if depth > limit:
            raise BudgetExceededError(
                "Recursion depth budget exceeded: {} > {}.".format(depth, limit),
                budget='max_depth', limit=limit)

    def left_options(self, g):
        """Return the Left options of g in stored order."""
        self._check_ids(g)
        return self._left[g]

    def right_options(self, g):
        """Return the Right options of g in stored order."""
        self._check_ids(g)
        return self._right[g]

    def birthday(self, g):
        """Return the formal birthday of the stored form g."""
        self._check_ids(g)
        return self._birthday[g]

    # Order and outcomes

    def le(self, g, h):
        """Return True if g <= h."""
        # pylint: disable=invalid-name
        self._check_ids(g, h)
        self._check_depth(g, h)
        return self._le(g, h)

    def _le(self, g, h):
        if g == h:
            return True
        key = (g, h)
        cached = self._le_cache.get(key)
        if cached is not None:
            return cached
        result = True
        for gl in self._left[g]:
            if self._le(h, gl):
                result = False
                break
        if result:
            for hr in self._right[h]:
                if self._le(hr, g):
                    result = False
                    break
        self._le_cache[key] = result
        return result

    def equal(self, g, h):
        """Return True if g and h have equal value."""
        return self.le(g, h) and self.le(h, g)

    def compare(self, g, h):
        """Return '<', '=', '>' or '||' comparing g with h."""
        g_le_h = self.le(g, h)
        h_le_g = self.le(h, g)
        if g_le_h and h_le_g:
            return '='
        if g_le_h:
            return '<'
        if h_le_g:
            return '>'
        return '||'

    def left_wins_first(self, g):
        """Return True if Left, moving first, wins g."""
        self._check_ids(g)
        self._check_depth(g)
        for gl in self._left[g]:
            if self._le(self.zero, gl):
                return True
        return False

    def right_wins_first(self, g):
        """Return True if Right, moving first, wins g."""
        self._check_ids(g)
        self._check_depth(g)
        for gr in self._right[g]:
            if self._le(gr, self.zero):
                return True
        return False

    def outcome(self, g):
        """Return the Outcome of g."""
        cached = self._outcome_cache.get(g)
        if cached is not None:
            return cached
        left_first = self.left_wins_first(g)
        right_first = self.right_wins_first(g)
        if left_first and right_first:
            result = Outcome.N
        elif left_first:
            result = Outcome.L
        elif right_first:
            result = Outcome.R
        else:
            result = Outcome.P
        self._outcome_cache[g] = result
        return result

    # Arithmetic

    def neg(self, g):
        """Return the Conway negative of g."""
        self._check_ids(g)
        self._check_depth(g)
        return self._neg(g)

    def _neg(self, g):
        cached = self._neg_cache.get(g)
        if cached is not None:
            return cached
        result = self.make_game([self._neg(gr) for gr in self._right[g]],
                                [self._neg(gl) for gl in self._left[g]])
        self._neg_cache[g] = result
        self._neg_cache[result] = g
        return result

    def sum(self, g, h):
        """Return the disjunctive sum g + h."""
        self._check_ids(g, h)
        self._check_depth(g, h)
        return self._sum(g, h)

    def _sum(self, g, h):
        if g == self.zero:
            return h
        if h == self.zero:
            return g
        key = (g, h) if g <= h else (h, g)
        cached = self._sum_cache.get(key)
        if cached is not None:
            return cached
        left = [self._sum(gl, h) for gl in self._left[g]]
        left.extend(self._sum(g, hl) for hl in self._left[h])
        right = [self._sum(gr, h) for gr in self._right[g]]
        right.extend(self._sum(g, hr) for hr in self._right[h])
        result = self.make_game(left, right)
        self._sum_cache[key] = result
        return result

    # Simplification

    def canonical_form(self, g):
        """Return the canonical form of g.

        Options are canonicalized recursively, then dominated options are
        removed and reversible options bypassed until neither applies.
        """
        self._check_ids(g)
        self._check_depth(g, g)
        return self._canonical(g)

    def _canonical(self, g):
        cached = self._canonical_cache.get(g)
        if cached is not None:
            return cached
        left = sorted({self._canonical(gl) for gl in self._left[g]})
        right = sorted({self._canonical(gr) for gr in self._right[g]})
        while True:
            left = self._undominated(left, lambda a, b: self._le(a, b))
            right = self._undominated(right, lambda a, b: self._le(b, a))
            current = self.make_game(left, right)
            bypassed = self._bypass_left(left, current)
            if bypassed is not None:
                left = bypassed
                continue
            bypassed = self._bypass_right(right, current)
            if bypassed is not None:
                right = bypassed
                continue
            break
        result = self.make_game(left, right)
        self._canonical_cache[g] = result
        self._canonical_cache[result] = result
        return result

    @staticmethod
    def _undominated(options, worse):
        # Options are canonical, so distinct ids never have equal values
        kept = []
        for opt in options:
            if not any(other != opt and worse(opt, other) for other in options):
                kept.append(opt)
        return kept

    def _bypass_left(self, left, current):
        for opt in left:
            for opt_r in self._right[opt]:
                if self._le(opt_r, current):
                    replaced = set(left)
                    replaced.discard(opt)
                    replaced.update(self._left[opt_r])
                    return sorted(replaced)
        return None

    def _bypass_right(self, right, current):
        for opt in right:
            for opt_l in self._left[opt]:
                if self._le(current, opt_l):
                    replaced = set(right)
                    replaced.discard(opt)
                    replaced.update(self._right[opt_l])
                    return sorted(replaced)
        return None

    # Numbers

    def to_number(self, g):
        """Return the DyadicRational value of g, or None if g is not a number."""
        return self._number_of_canonical(self.canonical_form(g))

    def is_number(self, g):
        """Return True if g equals a number."""
        return self.to_number(g) is not None

    def _number_of_canonical(self, c):
        cached = self._number_cache.get(c, _MISSING)
        if cached is not _MISSING:
            return cached
        value = None
        left, right = self._left[c], self._right[c]
        if len(left) <= 1 and len(right) <= 1:
            lo = self._number_of_canonical(left[0]) if left else None
            hi = self._number_of_canonical(right[0]) if right else None
            if (lo is not None or not left) and (hi is not None or not right):
                if lo is None or hi is None or lo < hi:
                    value = simplest_between(lo, hi)
        self._number_cache[c] = value
        return value

    def number_to_game(self, number):
        """Return the canonical form of a DyadicRational (or int)."""
        if isinstance(number, int):
            number = DyadicRational(number)
        cached = self._number_forms.get(number)
        if cached is not None:
            return cached
        if number.is_integer():
            result = self._integer_ladder(number.numerator)
        else:
            num, exp = number.numerator, number.exponent
            result = self.make_game(
                [self.number_to_game(DyadicRational(num - 1, exp))],
                [self.number_to_game(DyadicRational(num + 1, exp))])
        self._number_forms[number] = result
        return result

    def _integer_ladder(self, n):
        # Built iteratively: {n-1|} for n > 0, {|n+1} for n < 0
        step = 1 if n > 0 else -1
        current = self.zero
        for k in range(step, n + step, step):
            cached = self._number_forms.get(DyadicRational(k))
            if cached is None:
                if step > 0:
                    cached = self.make_game([current], [])
                else:
                    cached = self.make_game([], [current])
                self._number_forms[DyadicRational(k)] = cached
            current = cached
        return current

    def integer(self, n):
        """Return the canonical form of the integer n."""
        return self.number_to_game(DyadicRational(n))

    def incentives_negative(self, g):
        """Return True if every incentive of g is negative.

        The incentives are g^L - g for the Left options and g - g^R for the
        Right options of the stored form.
        """
        self._check_ids(g)
        canonical = self.canonical_form(g)
        negative = self.neg(canonical)
        for gl in self._left[g]:
            incentive = self.sum(self.canonical_form(gl), negative)
            if self.outcome(incentive) is not Outcome.R:
                return False
        for gr in self._right[g]:
            incentive = self.sum(canonical, self.neg(self.canonical_form(gr)))
            if self.outcome(incentive) is not Outcome.R:
                return False
        return True
