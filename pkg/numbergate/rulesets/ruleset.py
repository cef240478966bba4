# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Base class for rulesets.
"""

import logging

from ..checkjob import CheckJob
from ..games.arena import GameArena
from .rulesetserror import RulesetError

logger = logging.getLogger(__name__)


class Ruleset:
    """Base class for rulesets.

    A ruleset turns positions into game forms. Subclasses implement
    `parse_position`, `render_position`, `left_moves` and `right_moves`;
    positions must be immutable and hashable, and move lists must be
    deterministic and free of duplicates.
    """

    DEFAULT_CONFIGURATION = {}

    def __init__(self, configuration=None, arena=None, provider=None):
        """Create a ruleset bound to a game arena.

        Args:
            configuration (dict): overrides for DEFAULT_CONFIGURATION.
            arena (GameArena): the arena positions are converted into. A new
                arena is created if None.
            provider (RulesetProvider): provider responsible for this ruleset.

        Raises:
            RulesetError: if there is no name in the configuration.
        """
        config = dict(self.DEFAULT_CONFIGURATION)
        if configuration is not None:
            config.update(configuration)
        if not config.get('ruleset_name'):
            raise RulesetError("Ruleset configuration has no name.")
        self._configuration = config
        self._arena = arena if arena is not None else GameArena()
        self._provider = provider
        self._games = {}
        self._options = {}

    def name(self):
        """Return the ruleset name."""
        return self._configuration['ruleset_name']

    def configuration(self):
        """Return a copy of the ruleset configuration."""
        return dict(self._configuration)

    def provider(self):
        """Return the provider responsible for this ruleset."""
        return self._provider

    @property
    def arena(self):
        """The GameArena positions are converted into."""
        return self._arena

    def parse_position(self, text):
        """Parse position text in the ruleset's seed grammar."""
        raise NotImplementedError

    def render_position(self, position):
        """Render a position in the ruleset's seed grammar."""
        raise NotImplementedError

    def left_moves(self, position):
        """Return the ordered list of positions Left can move to."""
        raise NotImplementedError

    def right_moves(self, position):
        """Return the ordered list of positions Right can move to."""
        raise NotImplementedError

    def moves(self, position):
        """Return the pair (left moves, right moves)."""
        return self.left_moves(position), self.right_moves(position)

    def normalize_position(self, position):
        """Return the representative of the positions sharing the game form
        of `position`.

        Rulesets override this when different positions are known to have
        identical forms; the default keeps every position distinct.
        """
        return position

    def options(self, position):
        """Return the normalized (Left, Right) moves of `position`.

        Moves are normalized with `normalize_position`, duplicates are
        dropped keeping the first, and the result is memoized.

        Returns:
            tuple: (left, right) tuples of normalized positions.
        """
        key = self.normalize_position(position)
        cached = self._options.get(key)
        if cached is not None:
            return cached
        cached = (self._unique(self.left_moves(key)),
                  self._unique(self.right_moves(key)))
        self._options[key] = cached
        return cached

    def _unique(self, moves):
        return tuple(dict.fromkeys(self.normalize_position(pos) for pos in moves))

    def pair_claim(self, position, left, right):
        """Return the property the rules guarantee for an option pair.

        Args:
            position: a normalized position.
            left: one of its normalized Left moves.
            right: one of its normalized Right moves.

        Returns:
            str or None: 'f1' or 'f2' when the ruleset's rules settle the
            pair, None otherwise.
        """
        # pylint: disable=unused-argument
        return None

    def as_position(self, seed):
        """Return `seed` as a position, parsing it if it is text."""
        if isinstance(seed, str):
            return self.parse_position(seed)
        return seed

    def to_game(self, position):
        """Convert a position to its game form, memoized per normalized position."""
        key = self.normalize_position(position)
        cached = self._games.get(key)
        if cached is not None:
            return cached
        left, right = self.options(key)
        gid = self._arena.make_game([self.to_game(opt) for opt in left],
                                    [self.to_game(opt) for opt in right])
        self._games[key] = gid
        return gid

    def verify(self, seeds, options=None):
        """Check the hereditary closure of `seeds` asynchronously.

        Args:
            seeds (list): positions or position texts.
            options (dict): closure options, see `check_closure`.

        Returns:
            CheckJob: a submitted job whose result is a ClosureReport.
        """
        return CheckJob(self, seeds, options).submit()

    def __repr__(self):
        """Official string representation of a Ruleset."""
        display = "{}('{}')".format(self.__class__.__name__, self.name())
        provider = self.provider()
        if provider is not None:
            display = display + " from {}()".format(provider)
        return "<" + display + ">"
