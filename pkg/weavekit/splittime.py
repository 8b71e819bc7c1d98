#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for the split real line.

Every time t is split into the two points (t, -) and (t, +) which are
ordered lexicographically. Cadlag paths are continuous functions of
split times: f(t-) is the left limit and f(t+) the value at t.

Attributes:
    MINUS, PLUS (int): Side tags of a split time. Their numeric order
        realizes the lexicographic order of the split line.

    LESS, EQUAL, GREATER (int): Results of cmp().

"""

from collections import namedtuple


MINUS = -1
PLUS = 1

LESS = -1
EQUAL = 0
GREATER = 1


class SplitTime(namedtuple('SplitTime', 'time side')):

    """A time tagged with a side.

    Tuple comparison of (time, side) is the lexicographic order of the
    split real line, so instances compare and sort directly.

    Args:
        time (number): Finite time.
        side (int): MINUS or PLUS.

    """

    __slots__ = ()

    def __new__(cls, time, side):
        if side not in (MINUS, PLUS):
            raise ValueError('side must be MINUS or PLUS, got {0!r}'.format(side))

        return super(SplitTime, cls).__new__(cls, time, side)

    def __repr__(self):
        return '({0}{1})'.format(self.time, '-' if self.side == MINUS else '+')

    def flip(self):
        """Return the split time with the other side. """
        return SplitTime(self.time, -self.side)


def minus(time):
    """Return (time, -). """
    return SplitTime(time, MINUS)


def plus(time):
    """Return (time, +). """
    return SplitTime(time, PLUS)


def cmp(a, b):
    """Compare two split times.

    Returns:
        LESS, EQUAL or GREATER.

    """
    if a < b:
        return LESS

    if a > b:
        return GREATER

    return EQUAL


class SplitInterval(namedtuple('SplitInterval', 'lo hi')):

    """Closed interval [lo, hi] of the split line.

    Note:
        The open interval ((s, -), (t, +)) equals the closed interval
        [(s, +), (t, -)]; use SplitInterval.open() to build it.

    """

    __slots__ = ()

    def __new__(cls, lo, hi):
        if hi < lo:
            raise ValueError('empty split interval [{0}, {1}]'.format(lo, hi))

        return super(SplitInterval, cls).__new__(cls, lo, hi)

    @classmethod
    def open(cls, lo, hi):
        """Build the open interval (lo, hi) in its closed form. """
        if lo.side == MINUS:
            lo = lo.flip()
        else:
            raise ValueError('open interval must start at a (t, -) split time')

        if hi.side == PLUS:
            hi = hi.flip()
        else:
            raise ValueError('open interval must end at a (t, +) split time')

        return cls(lo, hi)

    def contains(self, a):
        return cmp(self.lo, a) != GREATER and cmp(a, self.hi) != GREATER


def interval_contains(interval, a):
    """Return True if lo <= a <= hi. """
    return interval.contains(a)
