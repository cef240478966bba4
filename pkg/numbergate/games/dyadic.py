# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
Exact dyadic rational numbers n / 2^k.
"""

import functools
import re
from fractions import Fraction

from .gameerror import GameError, GameParseError

_NUMBER_RE = re.compile(r'\s*(-?\d+)\s*(?:/\s*(\d+))?\s*\Z')


@functools.total_ordering
class DyadicRational:
    """A reduced dyadic rational number numerator / 2^exponent.

    Instances are immutable and hashable. The representation is reduced:
    either the exponent is 0 or the numerator is odd.
    """

    __slots__ = ('_numerator', '_exponent')

    def __init__(self, numerator, exponent=0):
        """Create a dyadic rational.

        Args:
            numerator (int): the numerator.
            exponent (int): the power of two in the denominator (>= 0).

        Raises:
            GameError: if the arguments are not integers or the exponent
            is negative.
        """
        if not isinstance(numerator, int) or not isinstance(exponent, int):
            raise GameError("Dyadic numerator and exponent must be integers.")
        if exponent < 0:
            raise GameError("Dyadic exponent must be non-negative.")
        while exponent > 0 and numerator % 2 == 0:
            numerator //= 2
            exponent -= 1
        self._numerator = numerator
        self._exponent = exponent

    @classmethod
    def from_fraction(cls, value):
        """Return the dyadic equal to a Fraction or int.

        Raises:
            GameError: if the denominator is not a power of two.
        """
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise GameError(
                "Not a dyadic rational: denominator {} is not a power "
                "of two.".format(den))
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def from_string(cls, text):
        """Parse an integer `n` or a dyadic `p/D` with D a power of two.

        Raises:
            GameParseError: if the text is malformed or the denominator is
            not a power of two.
        """
        match = _NUMBER_RE.match(text)
        if match is None:
            raise GameParseError("Malformed number \"{}\".".format(text),
                                 position=0, text=text)
        numerator = int(match.group(1))
        if match.group(2) is None:
            return cls(numerator)
        den = int(match.group(2))
        if den == 0 or den & (den - 1):
            raise GameParseError(
                "Malformed dyadic \"{}\": denominator is not a power "
                "of two.".format(text), position=match.start(2), text=text)
        return cls(numerator, den.bit_length() - 1)

    @property
    def numerator(self):
        """The (reduced) numerator."""
        return self._numerator

    @property
    def exponent(self):
        """The power of two in the denominator."""
        return self._exponent

    def as_fraction(self):
        """Return the value as a fractions.Fraction."""
        return Fraction(self._numerator, 1 << self._exponent)

    def is_integer(self):
        """Return True if the number is an integer."""
        return self._exponent == 0

    def floor(self):
        """Return the largest integer <= self."""
        return self._numerator >> self._exponent

    def ceil(self):
        """Return the smallest integer >= self."""
        return -((-self._numerator) >> self._exponent)

    def birthday(self):
        """Return the day on which this number is born."""
        if self._exponent == 0:
            return abs(self._numerator)
        return (abs(self._numerator) >> self._exponent) + self._exponent + 1

    def mean(self, other):
        """Return (self + other) / 2."""
        total = self + other
        return DyadicRational(total._numerator, total._exponent + 1)

    def _aligned(self, other):
        exp = max(self._exponent, other._exponent)
        return (self._numerator << (exp - self._exponent),
                other._numerator << (exp - other._exponent), exp)

    def __add__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        num, other_num, exp = self._aligned(other)
        return DyadicRational(num + other_num, exp)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return DyadicRational(-self._numerator, self._exponent)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._exponent == 0 and self._numerator == other
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return (self._numerator == other._numerator and
                self._exponent == other._exponent)

    def __lt__(self, other):
        if isinstance(other, int):
            other = DyadicRational(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        num, other_num, _ = self._aligned(other)
        return num < other_num

    def __hash__(self):
        if self._exponent == 0:
            return hash(self._numerator)
        return hash((self._numerator, self._exponent))

    def __repr__(self):
        return "DyadicRational({}, {})".format(self._numerator, self._exponent)

    def __str__(self):
        if self._exponent == 0:
            return str(self._numerator)
        return "{}/{}".format(self._numerator, 1 << self._exponent)


ZERO = DyadicRational(0)


def simplest_between(lo=None, hi=None):
    """Return the simplest number strictly between two bounds.

    Args:
        lo (DyadicRational or None): strict lower bound, None if absent.
        hi (DyadicRational or None): strict upper bound, None if absent.

    Returns:
        DyadicRational: the integer of least absolute value in the open
        interval if there is one, otherwise the dyadic of least exponent
        in it (which is unique).

    Raises:
        GameError: if both bounds are present and lo >= hi.
    """
    if lo is not None and hi is not None and not lo < hi:
        raise GameError("Empty interval: {} >= {}.".format(lo, hi))
    if (lo is None or lo < ZERO) and (hi is None or hi > ZERO):
        return ZERO
    if lo is not None and lo >= ZERO:
        k = DyadicRational(lo.floor() + 1)
        if hi is None or k < hi:
            return k
    else:
        k = DyadicRational(hi.ceil() - 1)
        if lo is None or k > lo:
            return k
    # No integer fits, so both bounds are present and lie in one unit interval
    exponent = 1
    while True:
        scaled = (lo.numerator << exponent) >> lo.exponent
        candidate = DyadicRational(scaled + 1, exponent)
        if candidate < hi:
            return candidate
        exponent += 1


def numbers_born_by(day):
    """Return all numbers with birthday <= day in ascending order."""
    numbers = [DyadicRational(n) for n in range(-day, day + 1)]
    for exponent in range(1, day):
        bound = (day - exponent) << exponent
        for numerator in range(1 - bound, bound, 2):
            numbers.append(DyadicRational(numerator, exponent))
    return sorted(numbers)
