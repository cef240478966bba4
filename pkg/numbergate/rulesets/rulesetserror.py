# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Exception for errors raised by numbergate rulesets.
"""

from ..gateerror import NumbergateError


class RulesetError(NumbergateError):
    """Class for errors raised in the numbergate.rulesets package."""
