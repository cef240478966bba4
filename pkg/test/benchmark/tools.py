# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
"""
Benchmarking utility functions.
"""

import itertools

from numpy import random

from numbergate.games import GameArena, random_game


class SeedsWithDescription:
    """ This is just a wrapper for adding a descriptive text to a seed list
    so ASV can print this text in its reports
    """
    def __init__(self, ruleset_name, seeds, description):
        self.ruleset_name = ruleset_name
        self._seeds = seeds
        self._description = description

    def __repr__(self):
        return self._description

    def __call__(self):
        return list(self._seeds)


def cutcake_seeds(size):
    """Every board up to size x size"""
    seeds = ['{}x{}'.format(rows, columns)
             for rows, columns in itertools.product(range(1, size + 1), repeat=2)]
    return SeedsWithDescription('cutcake', seeds, "Cutcake {0}x{0}".format(size))


def hackenbush_seeds(length):
    """Every string of exactly `length` edges"""
    seeds = [''.join(edges) for edges in itertools.product('BR', repeat=length)]
    return SeedsWithDescription('hackenbush', seeds, "Hackenbush {}".format(length))


def divisors_seeds(bound):
    """The pair (bound, bound), whose closure holds every pair of divisors"""
    return SeedsWithDescription('divisors', ['{0},{0}'.format(bound)],
                                "Divisors {}".format(bound))


def turtles_seeds(length):
    """Every line of exactly `length` turtles"""
    seeds = [''.join(line) for line in itertools.product('UD', repeat=length)]
    return SeedsWithDescription('turtles', seeds, "Turtles {}".format(length))


def chomp_seeds(rows, columns):
    """Every coloring of a full rows x columns grid"""
    seeds = []
    for cells in itertools.product('BG', repeat=rows * columns - 1):
        # a full grid in the seed grammar: rows from the top, poison implicit
        cells = ('',) + cells
        lines = [''.join(cells[row * columns:(row + 1) * columns])
                 for row in range(rows)]
        seeds.append('/'.join(reversed(lines)))
    return SeedsWithDescription('chomp', seeds, "Chomp {}x{}".format(rows, columns))


def random_forms(count, max_birthday, seed=None):
    """Return a fresh arena and `count` random forms built in it"""
    rng = random.RandomState(seed)
    arena = GameArena()
    forms = [random_game(arena, rng, max_birthday=max_birthday) for _ in range(count)]
    return arena, forms
