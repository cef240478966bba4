# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

from numbergate.rulesets import Ruleset


def ruleset_repr_hook(self):
    """ This is needed for ASV to beauty-printing reports """
    return self.name().capitalize()


Ruleset.__repr__ = ruleset_repr_hook
