# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Provider for numbergate rulesets."""

from .games.arena import GameArena
from .rulesets import (DivisorsRuleset, TurtlesRuleset, ChompRuleset,
                       CutcakeRuleset, HackenbushRuleset, SubtractionRuleset,
                       GameFormRuleset, RulesetError)


class RulesetProvider:
    """Provider for numbergate rulesets.

    All rulesets of a provider share one GameArena, so forms built from
    different rulesets can be summed and compared.
    """

    def __init__(self, arena_options=None):
        self._arena = GameArena(arena_options)

        # Populate the list of rulesets.
        self._rulesets = [DivisorsRuleset(arena=self._arena, provider=self),
                          TurtlesRuleset(arena=self._arena, provider=self),
                          ChompRuleset(arena=self._arena, provider=self),
                          CutcakeRuleset(arena=self._arena, provider=self),
                          HackenbushRuleset(arena=self._arena, provider=self),
                          SubtractionRuleset(arena=self._arena, provider=self),
                          GameFormRuleset(arena=self._arena, provider=self)]

    @property
    def arena(self):
        """The GameArena shared by the rulesets of this provider."""
        return self._arena

    def get_ruleset(self, name):
        """Return the ruleset called `name`.

        Raises:
            RulesetError: if there is no such ruleset.
        """
        rulesets = self.rulesets(name)
        if not rulesets:
            raise RulesetError("Unknown ruleset \"{}\"; available: {}.".format(
                name, ', '.join(r.name() for r in self._rulesets)))
        return rulesets[0]

    def rulesets(self, name=None):
        """Return the rulesets of this provider, optionally filtered by name."""
        rulesets = self._rulesets
        if name:
            rulesets = [ruleset for ruleset in rulesets if ruleset.name() == name]
        return list(rulesets)

    def __str__(self):
        return 'RulesetProvider'
