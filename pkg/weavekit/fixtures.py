#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module with hand built weaves.

The fixtures live in the window [-1, 1] x [-2, 2] and use exact
fractions. Their grids hold the points of every path at the times
-1, -1/2, 0, 1/2 and 1 together with the initial points.

    fig1-left       a path that jumps rightwards at its initial time,
                    approached by paths started just below it.
    fig1-right      a leftwards jump at 0 followed by a rightwards jump
                    at eps; its flow holds a path that jumps left and
                    back right within eps.
    fig3-left       a bi-infinite path that passes non-ramified points
                    but never starts at one.
    fig3-center     two paths started at time -1/eps, eps left and
                    right of 0, a path merging into the left one and
                    the right one turning right at 0.
    fig3-right      the eps -> 0 limit of fig3-center: the two red paths
                    collapse onto the constant 0, every point of which
                    is ramified.

"""

from fractions import Fraction

from .splittime import PLUS

from .paths import (
    CadlagPath,
    GraphPoint,
    constant_path
)

from .weave import (
    Window,
    Weave
)

from .formats import FIXTURES
from .utils import to_exact
from .errors import ParamError


WINDOW = Window(Fraction(1), Fraction(2))

GRID_TIMES = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))

DEFAULT_EPS = Fraction(1, 10)

FIG1_LEFT_APPROACH = 4


def fixture_grid(paths, times=GRID_TIMES):
    """Return the points of the paths at the given times plus the
    initial points that lie inside the window. """
    grid = set()

    for f in paths:
        for t in times:
            if f.covers_time(t):
                grid.add(GraphPoint(f.value_at(t, PLUS), t))

        if not f.extends_below and abs(f.sigma) <= WINDOW.T:
            grid.add(f.initial_point)

    return grid


def _weave(paths):
    return Weave(WINDOW, fixture_grid(paths), paths)


def _side_constants():
    return [constant_path(Fraction(-1)), constant_path(Fraction(3, 2))]


def fig1_left():
    """Weave with a path jumping rightwards at its initial time 0.

    The approaching paths start at (0, -2^-n) and run straight to
    (1, 0), the limit path jumps from 0 to 1 at time 0.

    """
    paths = _side_constants()
    paths.append(CadlagPath([(0, 0, 1)], False, True))

    for n in range(1, FIG1_LEFT_APPROACH + 1):
        paths.append(CadlagPath.continuous([(-Fraction(1, 2 ** n), 0), (0, 1)], False, True))

    return _weave(paths)


def fig1_right(eps=DEFAULT_EPS):
    """Weave with a leftwards jump at 0 and a rightwards jump at eps. """
    eps = _check_eps(eps)

    left_jump = CadlagPath([(0, 1, 0)], True, True)
    right_jump = CadlagPath([(eps, 0, 1)], False, True)

    return _weave([left_jump, right_jump, constant_path(Fraction(-3, 2)), constant_path(Fraction(3, 2))])


def fig3_left():
    """Weave whose bi-infinite path is in A(D) but not in A restricted to D.

    The constant 0 is joined from the left at time 0, so only its points
    before 0 are non-ramified.

    """
    red = constant_path(Fraction(0))
    merging = CadlagPath.continuous([(-1, -1), (0, 0)], False, True)
    right = constant_path(Fraction(1))

    return _weave([red, merging, right])


def fig3_center(eps=DEFAULT_EPS):
    """The eps member of the family converging to fig3_right. """
    eps = _check_eps(eps)
    start = -1 / eps

    merging = CadlagPath.continuous([(Fraction(-1, 2), -1 - eps), (0, -eps)], True, True)
    red_left = constant_path(-eps, start)
    red_right = CadlagPath.continuous([(start, eps), (0, eps), (Fraction(1, 2), 1 + eps)], False, True)

    return _weave([merging, red_left, red_right])


def fig3_right():
    """Limit weave of fig3_center: merging, red and turning paths at 0. """
    merging = CadlagPath.continuous([(Fraction(-1, 2), -1), (0, 0)], True, True)
    red = constant_path(Fraction(0))
    turning = CadlagPath.continuous([(0, 0), (Fraction(1, 2), 1)], True, True)

    return _weave([merging, red, turning])


def _check_eps(eps):
    if eps is None:
        return DEFAULT_EPS

    eps = to_exact(eps)

    if not 0 < eps < 1:
        raise ParamError('eps must be in (0, 1), got {0}'.format(eps))

    return eps


_FIXTURES = {
    'fig1-left': lambda eps: fig1_left(),
    'fig1-right': fig1_right,
    'fig3-left': lambda eps: fig3_left(),
    'fig3-center': fig3_center,
    'fig3-right': lambda eps: fig3_right()
}


def figure_fixture(name, eps=None):
    """Return the fixture with the given formats.FIXTURES key.

    Raises:
        ParamError for an unknown name or eps outside (0, 1).

    """
    if name not in FIXTURES:
        raise ParamError('unknown fixture {0!r}'.format(name))

    return _FIXTURES[name](eps)
