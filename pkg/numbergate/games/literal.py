# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Game literals: parsing and rendering.

Grammar (whitespace is insignificant):

    game   := number | "*" | "{" list "|" list "}"
    list   := <empty> | game ("," game)*
    number := integer | integer "/" power-of-two
"""

import re

from .dyadic import DyadicRational
from .gameerror import GameParseError

_NUMBER_RE = re.compile(r'-?\d+(?:\s*/\s*\d+)?')


class _LiteralParser:
    """Recursive descent parser over a game literal."""

    def __init__(self, arena, text):
        self._arena = arena
        self._text = text
        self._pos = 0

    def parse(self):
        gid = self._game()
        self._skip_whitespace()
        if self._pos != len(self._text):
            self._fail("Unexpected trailing input")
        return gid

    def _fail(self, message):
        raise GameParseError(
            "{} at position {} in \"{}\".".format(message, self._pos, self._text),
            position=self._pos, text=self._text)

    def _skip_whitespace(self):
        while self._pos < len(self._text) and self._text[self._pos].isspace():
            self._pos += 1

    def _peek(self):
        self._skip_whitespace()
        if self._pos < len(self._text):
            return self._text[self._pos]
        return ''

    def _expect(self, char):
        if self._peek() != char:
            self._fail("Expected \"{}\"".format(char))
        self._pos += 1

    def _game(self):
        char = self._peek()
        if char == '*':
            self._pos += 1
            return self._arena.star
        if char == '{':
            self._pos += 1
            left = self._list('|')
            self._expect('|')
            right = self._list('}')
            self._expect('}')
            return self._arena.make_game(left, right)
        if char == '-' or char.isdigit():
            return self._number()
        if not char:
            self._fail("Unexpected end of input")
        return self._fail("Unexpected character \"{}\"".format(char))

    def _list(self, terminator):
        if self._peek() == terminator:
            return []
        items = [self._game()]
        while self._peek() == ',':
            self._pos += 1
            items.append(self._game())
        return items

    def _number(self):
        match = _NUMBER_RE.match(self._text, self._pos)
        if match is None:
            self._fail("Malformed number")
        try:
            number = DyadicRational.from_string(match.group(0))
        except GameParseError as err:
            raise GameParseError(
                "{} at position {} in \"{}\".".format(
                    err.message, self._pos, self._text),
                position=self._pos, text=self._text)
        self._pos = match.end()
        return self._arena.number_to_game(number)


def parse_game(arena, text):
    """Parse a game literal into an interned GameId.

    Number literals expand to canonical number forms; `*` is {0|0}.

    Args:
        arena (GameArena): the arena to intern into.
        text (str): the literal.

    Returns:
        int: the GameId.

    Raises:
        GameParseError: on a syntax error or a malformed dyadic.
    """
    return _LiteralParser(arena, text).parse()


def render_game(arena, g, braces=False):
    """Render a GameId as a game literal.

    Canonical number forms render as numbers and {0|0} as `*`; every other
    form renders in braces with its options in stored order.

    Args:
        arena (GameArena): the arena holding g.
        g (int): the GameId.
        braces (bool): always use braces at the top level (Default: False).

    Returns:
        str: the literal.
    """
    memo = {}

    def _render(gid, top):
        if not top:
            if gid in memo:
                return memo[gid]
            if gid == arena.star:
                return '*'
            value = arena.to_number(gid)
            if value is not None and arena.number_to_game(value) == gid:
                memo[gid] = str(value)
                return memo[gid]
        text = '{' + ','.join(_render(x, False) for x in arena.left_options(gid)) + \
               '|' + ','.join(_render(x, False) for x in arena.right_options(gid)) + '}'
        if not top:
            memo[gid] = text
        return text

    return _render(g, braces)
