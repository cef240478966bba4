# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Exceptions raised by numbergate.
"""


class NumbergateError(Exception):
    """Base class for errors raised by numbergate."""

    def __init__(self, *message):
        """Set the error message."""
        super().__init__(*message)
        self.message = ' '.join(message)

    def __str__(self):
        """Return the message."""
        return repr(self.message)


class BudgetExceededError(NumbergateError):
    """A resource budget (arena size, recursion depth, closure size) was exceeded.

    Exceeding a budget never produces a wrong answer: the computation is
    abandoned and this error is raised instead.
    """

    def __init__(self, *message, budget=None, limit=None, frontier=None):
        super().__init__(*message)
        self.budget = budget
        self.limit = limit
        self.frontier = frontier
