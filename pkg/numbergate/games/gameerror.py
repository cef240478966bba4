# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Exceptions for errors raised by the numbergate games package.
"""

from ..gateerror import NumbergateError


class GameError(NumbergateError):
    """Structural or domain error raised by game operations."""


class GameParseError(GameError):
    """Syntax error in a game literal.

    Attributes:
        position (int): 0-based offset of the offending character.
        text (str): the literal being parsed.
    """

    def __init__(self, *message, position=None, text=None):
        super().__init__(*message)
        self.position = position
        self.text = text
