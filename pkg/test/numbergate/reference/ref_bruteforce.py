# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Brute force reference values for short partizan games.

Games are nested tuples (left options, right options) and numbers are
fractions.Fraction, so nothing here depends on the engine under test.
Outcomes come from plain minimax; the order and values are derived from
outcomes of differences.
"""

from fractions import Fraction
from functools import lru_cache

ZERO = ((), ())
STAR = ((ZERO,), (ZERO,))


def game(left=(), right=()):
    """Return the form {left | right}."""
    return (tuple(left), tuple(right))


@lru_cache(maxsize=None)
def left_wins_moving_first(g):
    """Left moves first and wins."""
    return any(not right_wins_moving_first(gl) for gl in g[0])


@lru_cache(maxsize=None)
def right_wins_moving_first(g):
    """Right moves first and wins."""
    return any(not left_wins_moving_first(gr) for gr in g[1])


def outcome(g):
    """Return 'L', 'R', 'P' or 'N' by minimax."""
    left, right = left_wins_moving_first(g), right_wins_moving_first(g)
    if left and right:
        return 'N'
    if left:
        return 'L'
    if right:
        return 'R'
    return 'P'


@lru_cache(maxsize=None)
def neg(g):
    """Conway negative."""
    return (tuple(neg(gr) for gr in g[1]), tuple(neg(gl) for gl in g[0]))


@lru_cache(maxsize=None)
def add(g, h):
    """Disjunctive sum."""
    left = tuple(add(gl, h) for gl in g[0]) + tuple(add(g, hl) for hl in h[0])
    right = tuple(add(gr, h) for gr in g[1]) + tuple(add(g, hr) for hr in h[1])
    return (left, right)


def le(g, h):
    """g <= h iff Right moving first loses h - g."""
    return not right_wins_moving_first(add(h, neg(g)))


def equal(g, h):
    """g = h iff h - g is a P-position."""
    return outcome(add(h, neg(g))) == 'P'


@lru_cache(maxsize=None)
def birthday(g):
    """Formal birthday of a tuple form."""
    return 1 + max((birthday(x) for x in g[0] + g[1]), default=-1)


@lru_cache(maxsize=None)
def numbers_by_day(day):
    """Return {Fraction: form} for the numbers born by `day`.

    Each day adds one number below the least, one above the greatest and
    the midpoint of every adjacent pair, each built from its neighbours.
    """
    if day == 0:
        return {Fraction(0): ZERO}
    known = dict(numbers_by_day(day - 1))
    values = sorted(known)
    born = {values[0] - 1: game((), (known[values[0]],)),
            values[-1] + 1: game((known[values[-1]],), ())}
    for low, high in zip(values, values[1:]):
        born[(low + high) / 2] = game((known[low],), (known[high],))
    known.update(born)
    return known


def number_birthday(x):
    """Return the day x is born."""
    day = 0
    while x not in numbers_by_day(day):
        day += 1
    return day


def simplest_between(lo=None, hi=None):
    """Return the first-born number strictly between lo and hi."""
    day = 0
    while True:
        candidates = [x for x in numbers_by_day(day)
                      if (lo is None or x > lo) and (hi is None or x < hi)]
        if candidates:
            return min(candidates, key=lambda x: (number_birthday(x), abs(x)))
        day += 1


def value(g):
    """Return the Fraction equal to g, or None if g is not a number."""
    numbers = numbers_by_day(birthday(g))
    for x in sorted(numbers, key=lambda x: (number_birthday(x), abs(x), x)):
        if equal(g, numbers[x]):
            return x
    return None


def hackenbush_string_value(edges):
    """Value of a blue-red string, ground first, by its sign expansion.

    Edges up to the first change of color count one each; every later edge
    counts half as much as the one below it.
    """
    total = Fraction(0)
    weight = Fraction(1)
    changed = False
    for pos, edge in enumerate(edges.upper()):
        if pos > 0 and edge != edges[pos - 1].upper():
            changed = True
        if changed:
            weight /= 2
        total += weight if edge == 'B' else -weight
    return total


@lru_cache(maxsize=None)
def cutcake_board(m, n):
    """Tuple form of one m x n cutcake board (Left cuts columns)."""
    left = tuple(add(cutcake_board(m, k), cutcake_board(m, n - k))
                 for k in range(1, n))
    right = tuple(add(cutcake_board(k, n), cutcake_board(m - k, n))
                  for k in range(1, m))
    return (left, right)


def from_arena(arena, g):
    """Convert an arena GameId to a tuple form."""
    memo = {}

    def _convert(gid):
        if gid not in memo:
            memo[gid] = (tuple(_convert(x) for x in arena.left_options(gid)),
                         tuple(_convert(x) for x in arena.right_options(gid)))
        return memo[gid]

    return _convert(g)
