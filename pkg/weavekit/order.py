#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for the crossing and ordering calculus of paths.

At every split time a of its domain a path f splits space into the
half lines L_a(f) = [-inf, f(a)) and R_a(f) = (f(a), +inf]. At the
initial time of a finite path only the half line on the side of the
initial jump is present, at the final time of a finite path only the
half line on the side of the final jump. Two paths cross when
L(f) meets R(g) and L(g) meets R(f).

Attributes:
    NONE, LEFT_TO_RIGHT, RIGHT_TO_LEFT, BOTH (string): Cross kinds.
        See formats.CROSS_KINDS.

"""

from collections import (
    namedtuple,
    defaultdict
)
from functools import cmp_to_key

from .splittime import (
    SplitTime,
    MINUS,
    PLUS
)

from .paths import (
    CadlagPath,
    extends,
    on_graph
)

from .errors import (
    DomainError,
    ParamError
)


NONE = 'none'
LEFT_TO_RIGHT = 'left_to_right'
RIGHT_TO_LEFT = 'right_to_left'
BOTH = 'both'


SideBound = namedtuple('SideBound', 'a L_bound R_bound')


def presence(f, a):
    """Return (L present, R present) of the path f at the split time a. """
    if not f.in_domain(a):
        return False, False

    t, side = a

    if side == MINUS and t == f.sigma and not f.extends_below:
        before, after = f.initial_left, f.value_at(t, PLUS)
        return after < before, before < after

    if side == PLUS and t == f.tau and not f.extends_above:
        before, after = f.value_at(t, MINUS), f.final_right
        return before < after, after < before

    return True, True


def side_profile(f):
    """Return the L/R boundary description at every breakpoint side.

    Returns:
        List of SideBound records. A bound is None when the half line
        is empty at that split time.

    """
    profile = []

    for bp in f.breakpoints:
        for side in (MINUS, PLUS):
            a = SplitTime(bp.t, side)
            has_left, has_right = presence(f, a)
            value = f.value_at(bp.t, side)

            profile.append(SideBound(a,
                                     value if has_left else None,
                                     value if has_right else None))

    return profile


def _events(f, g):
    times = sorted(set(f.times) | set(g.times))
    return [SplitTime(t, side) for t in times for side in (MINUS, PLUS)]


def _witnesses(f, g):
    """Return (points where f < g, points where f > g).

    A point where f < g lies in R(f) and L(g); a point where f > g lies
    in L(f) and R(g).

    """
    lower, upper = [], []

    for a in _events(f, g):
        f_left, f_right = presence(f, a)
        g_left, g_right = presence(g, a)

        if not ((f_left or f_right) and (g_left or g_right)):
            continue

        f_value = f.value_at(*a)
        g_value = g.value_at(*a)

        if f_right and g_left and f_value < g_value:
            lower.append(a)

        if f_left and g_right and f_value > g_value:
            upper.append(a)

    return lower, upper


def left_of(f, g):
    """Return True if f stays weakly left of g (L(f) and R(g) never meet). """
    for a in _events(f, g):
        f_left = presence(f, a)[0]
        g_right = presence(g, a)[1]

        if f_left and g_right and f.value_at(*a) > g.value_at(*a):
            return False

    return True


def classify_crossing(f, g):
    """Return the cross kind of the pair (f, g).

    LEFT_TO_RIGHT means f is left of g at some split time and right of
    it at a later one; RIGHT_TO_LEFT the opposite.

    """
    lower, upper = _witnesses(f, g)

    if not lower or not upper:
        return NONE

    left_to_right = min(lower) < max(upper)
    right_to_left = min(upper) < max(lower)

    if left_to_right and right_to_left:
        return BOTH

    if left_to_right:
        return LEFT_TO_RIGHT

    return RIGHT_TO_LEFT


def crossing_witness(f, g):
    """Return (a, b) with f > g at a and f < g at b, or None. """
    lower, upper = _witnesses(f, g)

    if not lower or not upper:
        return None

    return min(upper), min(lower)


def non_crossing(f, g):
    return classify_crossing(f, g) == NONE


def eps_cross(f, g, eps):
    """Return True if f and g cross by at least eps at a common start.

    With sigma the later of the two initial times, f jumps down by eps
    and g jumps up by eps at sigma, f starts eps right of g and ends eps
    left of it, and f stays weakly left of g afterwards.

    Raises:
        ParamError if eps is not positive.

    """
    if eps <= 0:
        raise ParamError('eps must be positive, got {0}'.format(eps))

    if f.extends_below and g.extends_below:
        return False

    if f.extends_below:
        sigma = g.sigma
    elif g.extends_below:
        sigma = f.sigma
    else:
        sigma = max(f.sigma, g.sigma)

    try:
        f_before, f_after = f.value_at(sigma, MINUS), f.value_at(sigma, PLUS)
        g_before, g_after = g.value_at(sigma, MINUS), g.value_at(sigma, PLUS)
    except DomainError:
        return False

    if not (f_after + eps <= g_after and g_before + eps <= f_before):
        return False

    if not (f_after + eps <= f_before and g_before + eps <= g_after):
        return False

    _, upper = _witnesses(f, g)

    return all(a < SplitTime(sigma, PLUS) for a in upper)


def _value_bounds(*paths):
    values = [value for path in paths for value in path.values()]
    return min(values) - 1, max(values) + 1


def _from_level(f, level):
    """f continued below its initial time at the constant level. """
    if f.extends_below:
        return f

    bps = [(f.sigma, level, f.value_at(f.sigma, PLUS))] + list(f.breakpoints[1:])
    return CadlagPath(bps, True, f.extends_above)


def _constant_below(f):
    return _from_level(f, f.initial_left)


def _copy_below(later, earlier, shift):
    """later continued below its initial time by earlier shifted by shift. """
    bps = [(bp.t, bp.left + shift, bp.right + shift) for bp in earlier.breakpoints if bp.t < later.sigma]
    bps.append((later.sigma, later.initial_left, later.value_at(later.sigma, PLUS)))
    bps.extend(later.breakpoints[1:])

    return CadlagPath(bps, True, later.extends_above)


def _pointwise_below(f, g):
    for a in _events(f, g):
        if f.value_at(*a) > g.value_at(*a):
            return False

    return True


def _starts_later(f, g):
    if f.extends_below:
        return False

    return g.extends_below or f.sigma > g.sigma


def witness_extensions(f, g):
    """Search bi-infinite extensions f' of f and g' of g with f' <= g'.

    Three constructions are tried after the plain constant continuation:
    f' starts from far left, g' starts from far right, or the later
    starting path copies the moves of the other one, shifted so that it
    meets its own initial point.

    Returns:
        (f', g') or None.

    Raises:
        ParamError unless both paths extend above.

    """
    if not (f.extends_above and g.extends_above):
        raise ParamError('witness extensions need forward paths')

    low, high = _value_bounds(f, g)

    candidates = [
        (_constant_below(f), _constant_below(g)),
        (_from_level(f, low), _constant_below(g)),
        (_constant_below(f), _from_level(g, high))
    ]

    if _starts_later(g, f):
        f_ext = _constant_below(f)
        shift = g.initial_left - f_ext.value_at(g.sigma, MINUS)
        candidates.append((f_ext, _copy_below(g, f_ext, shift)))
    elif _starts_later(f, g):
        g_ext = _constant_below(g)
        shift = f.initial_left - g_ext.value_at(f.sigma, MINUS)
        candidates.append((_copy_below(f, g_ext, shift), g_ext))

    for f_ext, g_ext in candidates:
        if extends(f, f_ext) and extends(g, g_ext) and _pointwise_below(f_ext, g_ext):
            return f_ext, g_ext

    return None


def left_of_by_witness(f, g):
    """Decide f left of g by searching witness extensions. """
    return witness_extensions(f, g) is not None


def _compare(f, g):
    f_g, g_f = left_of(f, g), left_of(g, f)

    if f_g and g_f:
        return (f.sort_key() > g.sort_key()) - (f.sort_key() < g.sort_key())

    if f_g:
        return -1

    return 1


def sort_by_left_of(paths):
    """Sort a non-crossing family from left to right. """
    return sorted(paths, key=cmp_to_key(_compare))


def maximal_elements(paths):
    """Return the paths that no other path strictly extends.

    Note:
        A forward path with more than one breakpoint can only extend
        into a path with the same last breakpoint, and a forward path
        with one breakpoint only into a path with the same final value,
        so candidates are looked up in two indices first.

    """
    unique = sorted(set(paths), key=CadlagPath.sort_key)

    by_last = defaultdict(list)
    by_final = defaultdict(list)

    for f in unique:
        if f.extends_above:
            by_last[f.breakpoints[-1]].append(f)
            by_final[f.final_right].append(f)

    result = []

    for g in unique:
        if not g.extends_above:
            candidates = unique
        elif len(g.breakpoints) > 1:
            candidates = by_last[g.breakpoints[-1]]
        else:
            candidates = by_final[g.final_right]

        if not any(f != g and extends(g, f) for f in candidates):
            result.append(g)

    return result


def _paths_of(family):
    return list(getattr(family, 'paths', family)), getattr(family, 'restriction_closed', False)


def in_upset(f, family):
    """True if f extends into some member of family. """
    return any(extends(f, g) for g in family)


def coverage_order(a_family, b_family):
    """Return True if A precedes B in the coverage order.

    A precedes B when every path of B that extends into A belongs to A
    and every path of A extends into B. A family marked restriction
    closed stands for itself together with all restrictions of its
    members.

    """
    a_paths, a_closed = _paths_of(a_family)
    b_paths, _ = _paths_of(b_family)

    if not a_closed:
        a_set = set(a_paths)

        for g in b_paths:
            if g not in a_set and in_upset(g, a_paths):
                return False

    return all(in_upset(f, b_paths) for f in a_paths)


def is_ramified(paths, z):
    """True if two paths through z are incomparable under extension. """
    through = [f for f in _paths_of(paths)[0] if on_graph(f, z)]

    for index, f in enumerate(through):
        for g in through[index + 1:]:
            if not extends(f, g) and not extends(g, f):
                return True

    return False
