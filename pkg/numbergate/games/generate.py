# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Random game forms for fuzzing and benchmarks.
"""

import numpy as np


def random_game(arena, rng=None, max_birthday=4, max_options=2):
    """Return a random game form of birthday at most `max_birthday`.

    Each node draws between 0 and `max_options` options per side, and each
    option is a random form born strictly earlier.

    Args:
        arena (GameArena): arena to intern into.
        rng (numpy.random.RandomState or int or None): random generator or
            seed.
        max_birthday (int): birthday bound of the result.
        max_options (int): maximum number of options per side per node.

    Returns:
        int: the GameId of the random form.
    """
    if not isinstance(rng, np.random.RandomState):
        rng = np.random.RandomState(rng)
    if max_birthday <= 0:
        return arena.zero
    sides = []
    for _ in range(2):
        count = rng.randint(0, max_options + 1)
        sides.append([
            random_game(arena, rng, rng.randint(0, max_birthday), max_options)
            for _ in range(count)])
    return arena.make_game(sides[0], sides[1])
