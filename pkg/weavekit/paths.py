#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for finite piecewise linear cadlag paths.

A path is stored as an ordered tuple of breakpoints (t, left, right).
Between consecutive breakpoints the path runs linearly from the right
value of the first to the left value of the second. The left value of
the first breakpoint is the value just before the initial time, so a
path may jump at its initial time.

The extends_below and extends_above flags stand for an infinite initial
or final time. The path is then constant beyond its first or last
breakpoint.

Example:
    A unit step on [-1, 1].

        step = CadlagPath([(-1, 0, 0), (0, 0, 1), (1, 1, 1)])
        step.value_at(0, MINUS)  # 0
        step.value_at(0, PLUS)   # 1

"""

from bisect import bisect_left
from collections import namedtuple

from .splittime import (
    SplitTime,
    MINUS,
    PLUS
)

from .errors import (
    DomainError,
    NotOnPath,
    OrderViolation,
    GlueMismatch,
    CrossingAtSeam,
    ParamError
)


Breakpoint = namedtuple('Breakpoint', 't left right')

GraphPoint = namedtuple('GraphPoint', 'x t')


class Polyline(namedtuple('Polyline', 'vertices gaps tail_below tail_above')):

    """Ordered chain of graph points.

    Segment i joins vertices[i] and vertices[i + 1] unless i is in gaps.
    Every vertex belongs to the point set. The tails stand for the
    constant continuation of the first and last vertex to minus and
    plus infinity in time.

    """

    __slots__ = ()

    def segments(self):
        """Yield the (start, end) pairs of the drawn segments. """
        for index in range(len(self.vertices) - 1):
            if index not in self.gaps:
                yield self.vertices[index], self.vertices[index + 1]


def _collinear(prev_bp, bp, next_bp):
    """True if bp has no jump and lies on the line of its neighbours. """
    if bp.left != bp.right:
        return False

    return (bp.left - prev_bp.right) * (next_bp.t - bp.t) == (next_bp.left - bp.right) * (bp.t - prev_bp.t)


def normalize(breakpoints, extends_below, extends_above):
    """Return the canonical breakpoint tuple of a path.

    Interior breakpoints without a jump that sit on a straight line are
    dropped. Constant leading (trailing) breakpoints of a path that
    extends below (above) are trimmed. A constant bi-infinite path keeps
    a single breakpoint at time 0.

    """
    bps = [Breakpoint(*bp) for bp in breakpoints]

    if not bps:
        raise ValueError('a path needs at least one breakpoint')

    for index in range(1, len(bps)):
        if not bps[index - 1].t < bps[index].t:
            raise ValueError('breakpoint times must be strictly increasing')

    result = [bps[0]]

    for index in range(1, len(bps) - 1):
        if not _collinear(result[-1], bps[index], bps[index + 1]):
            result.append(bps[index])

    if len(bps) > 1:
        result.append(bps[-1])

    if extends_below:
        while len(result) > 1 and result[0].left == result[0].right == result[1].left:
            result.pop(0)

    if extends_above:
        while len(result) > 1 and result[-1].left == result[-1].right == result[-2].right:
            result.pop()

    if extends_below and extends_above and len(result) == 1 and result[0].left == result[0].right:
        value = result[0].left
        result = [Breakpoint(0 * result[0].t, value, value)]

    return tuple(result)


class CadlagPath(object):

    """Finite piecewise linear cadlag path.

    Args:
        breakpoints (iterable): (t, left, right) triples with strictly
            increasing times.

        extends_below (boolean): Initial time at minus infinity.

        extends_above (boolean): Final time at plus infinity.

    Note:
        Instances are immutable and compare by value. Two paths that
        describe the same function on the split line have the same
        canonical breakpoints.

    """

    __slots__ = ('breakpoints', 'extends_below', 'extends_above', '_times', '_hash')

    def __init__(self, breakpoints, extends_below=False, extends_above=False):
        extends_below = bool(extends_below)
        extends_above = bool(extends_above)

        bps = normalize(breakpoints, extends_below, extends_above)

        object.__setattr__(self, 'breakpoints', bps)
        object.__setattr__(self, 'extends_below', extends_below)
        object.__setattr__(self, 'extends_above', extends_above)
        object.__setattr__(self, '_times', [bp.t for bp in bps])
        object.__setattr__(self, '_hash', hash((bps, extends_below, extends_above)))

    def __setattr__(self, name, value):
        raise AttributeError('CadlagPath is immutable')

    @classmethod
    def continuous(cls, points, extends_below=False, extends_above=False):
        """Build a continuous path through the given (t, x) points. """
        return cls([(t, x, x) for t, x in points], extends_below, extends_above)

    @property
    def sigma(self):
        return self.breakpoints[0].t

    @property
    def tau(self):
        return self.breakpoints[-1].t

    @property
    def initial_left(self):
        return self.breakpoints[0].left

    @property
    def final_right(self):
        return self.breakpoints[-1].right

    @property
    def times(self):
        return list(self._times)

    @property
    def is_bi_infinite(self):
        return self.extends_below and self.extends_above

    @property
    def is_degenerate(self):
        """True for a single point path (sigma = tau, no flags). """
        return len(self.breakpoints) == 1 and not (self.extends_below or self.extends_above)

    @property
    def initial_point(self):
        return GraphPoint(self.initial_left, self.sigma)

    @property
    def final_point(self):
        return GraphPoint(self.final_right, self.tau)

    def values(self):
        """Return every breakpoint value. """
        return [value for bp in self.breakpoints for value in (bp.left, bp.right)]

    def sort_key(self):
        return (not self.extends_below, self.sigma, self.initial_left, self.breakpoints, self.extends_above)

    def in_domain(self, a):
        """True if the split time a lies in the domain of the path. """
        if a < SplitTime(self.sigma, MINUS) and not self.extends_below:
            return False

        if a > SplitTime(self.tau, PLUS) and not self.extends_above:
            return False

        return True

    def covers_time(self, t):
        """True if some side of time t lies in the domain. """
        return self.in_domain(SplitTime(t, MINUS)) or self.in_domain(SplitTime(t, PLUS))

    def value_at(self, t, side):
        """Return f(t-) or f(t+).

        Raises:
            DomainError if (t, side) is outside the domain.

        """
        bps = self.breakpoints

        if t < bps[0].t:
            if self.extends_below:
                return bps[0].left
            raise DomainError('({0}, {1}) is before the initial time {2}'.format(t, side, bps[0].t))

        if t > bps[-1].t:
            if self.extends_above:
                return bps[-1].right
            raise DomainError('({0}, {1}) is after the final time {2}'.format(t, side, bps[-1].t))

        index = bisect_left(self._times, t)

        if bps[index].t == t:
            return bps[index].left if side == MINUS else bps[index].right

        start, end = bps[index - 1], bps[index]
        return start.right + (end.left - start.right) * (t - start.t) / (end.t - start.t)

    def __eq__(self, other):
        if not isinstance(other, CadlagPath):
            return NotImplemented

        return (self.breakpoints, self.extends_below, self.extends_above) == \
            (other.breakpoints, other.extends_below, other.extends_above)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return 'CadlagPath({0!r}, extends_below={1}, extends_above={2})'.format(
            [tuple(bp) for bp in self.breakpoints], self.extends_below, self.extends_above)


def eval(f, a):
    """Evaluate f at the split time a. """
    return f.value_at(a.time, a.side)


def constant_path(value, sigma=None):
    """Return the constant path at value.

    The path is bi-infinite when sigma is None, otherwise it starts at
    sigma and extends above.

    """
    if sigma is None:
        return CadlagPath([(0, value, value)], True, True)

    return CadlagPath([(sigma, value, value)], False, True)


def interpolated_graph(f):
    """Return the polyline of H(f). """
    return _graph(f, with_jumps=True)


def closed_graph(f):
    """Return the polyline of G(f); jump segments become gaps. """
    return _graph(f, with_jumps=False)


def _graph(f, with_jumps):
    vertices = []
    gaps = set()

    for bp in f.breakpoints:
        vertices.append(GraphPoint(bp.left, bp.t))

        if bp.right != bp.left:
            if not with_jumps:
                gaps.add(len(vertices) - 1)
            vertices.append(GraphPoint(bp.right, bp.t))

    return Polyline(tuple(vertices), frozenset(gaps), f.extends_below, f.extends_above)


def jump_range(f, t):
    """Return (f(t-), f(t+)) or raise DomainError. """
    if not f.covers_time(t):
        raise DomainError('time {0} is outside the path'.format(t))

    return f.value_at(t, MINUS), f.value_at(t, PLUS)


def on_graph(f, z):
    """True if the graph point z lies on H(f). """
    if not f.covers_time(z.t):
        return False

    low, high = jump_range(f, z.t)

    return min(low, high) <= z.x <= max(low, high)


def _check_on_graph(f, z):
    if not on_graph(f, z):
        raise NotOnPath('({0}, {1}) is not on the path'.format(z.x, z.t))


def graph_before(f, w, z):
    """Return True if w comes no later than z in the order of H(f).

    Raises:
        NotOnPath if w or z is not on H(f).

    """
    _check_on_graph(f, w)
    _check_on_graph(f, z)

    if w.t != z.t:
        return w.t < z.t

    start = f.value_at(w.t, MINUS)

    return abs(w.x - start) <= abs(z.x - start)


def restrict(f, z):
    """Return f|z, the part of f from the graph point z on.

    Raises:
        NotOnPath if z is not on H(f).

    """
    _check_on_graph(f, z)

    later = [bp for bp in f.breakpoints if bp.t > z.t]

    return CadlagPath([(z.t, z.x, f.value_at(z.t, PLUS))] + later, False, f.extends_above)


def restrict_span(f, w, z):
    """Return the part of f between the graph points w and z.

    Raises:
        NotOnPath if w or z is not on H(f).
        OrderViolation if z comes strictly before w.

    """
    if not graph_before(f, w, z):
        raise OrderViolation('({0}, {1}) comes after ({2}, {3})'.format(w.x, w.t, z.x, z.t))

    if w.t == z.t:
        return CadlagPath([(w.t, w.x, z.x)])

    inner = [bp for bp in f.breakpoints if w.t < bp.t < z.t]

    return CadlagPath([(w.t, w.x, f.value_at(w.t, PLUS))] + inner + [(z.t, f.value_at(z.t, MINUS), z.x)])


def _between(value, low, high):
    return min(low, high) <= value <= max(low, high)


def extends(f, g):
    """Return True if g extends f (f is a sub-path of g).

    The ordered graph of f must be a contiguous piece of the ordered
    graph of g. A single point path extends into g when its jump segment
    lies on H(g) in the order of H(g).

    """
    if f.extends_below and not g.extends_below:
        return False

    if f.extends_above and not g.extends_above:
        return False

    if not f.extends_below and not g.covers_time(f.sigma):
        return False

    if not f.extends_above and not g.covers_time(f.tau):
        return False

    if f.is_degenerate:
        start = GraphPoint(f.initial_left, f.sigma)
        end = GraphPoint(f.final_right, f.sigma)

        return on_graph(g, start) and on_graph(g, end) and graph_before(g, start, end)

    times = sorted(set(f.times) | set(g.times))

    for t in times:
        below = f.extends_below or t > f.sigma
        above = f.extends_above or t < f.tau

        if below and above:
            if f.value_at(t, MINUS) != g.value_at(t, MINUS):
                return False
            if f.value_at(t, PLUS) != g.value_at(t, PLUS):
                return False

    if not f.extends_below:
        g_left, g_right = jump_range(g, f.sigma)

        if f.value_at(f.sigma, PLUS) != g_right:
            return False
        if not _between(f.initial_left, g_left, g_right):
            return False

    if not f.extends_above:
        g_left, g_right = jump_range(g, f.tau)

        if f.value_at(f.tau, MINUS) != g_left:
            return False
        if not _between(f.final_right, g_left, g_right):
            return False

    return True


def rotate(f):
    """Return f rotated by 180 degrees: f'(t+-) = -f(-t-+). """
    bps = [(-bp.t, -bp.right, -bp.left) for bp in reversed(f.breakpoints)]

    return CadlagPath(bps, f.extends_above, f.extends_below)


def rotate_point(z):
    return GraphPoint(-z.x, -z.t)


def concat(g, f):
    """Glue the backward piece g to the forward piece f.

    Raises:
        GlueMismatch if g does not end where f begins.
        CrossingAtSeam if g and f cross.

    """
    if g.extends_above or f.extends_below:
        raise GlueMismatch('pieces do not have a common finite seam')

    if g.tau != f.sigma:
        raise GlueMismatch('g ends at time {0}, f begins at time {1}'.format(g.tau, f.sigma))

    if g.final_right != f.initial_left:
        raise GlueMismatch('g ends at {0}, f begins at {1}'.format(g.final_right, f.initial_left))

    from .order import classify_crossing, NONE

    kind = classify_crossing(g, f)

    if kind != NONE:
        raise CrossingAtSeam('pieces cross at the seam ({0})'.format(kind))

    seam = (f.sigma, g.value_at(f.sigma, MINUS), f.value_at(f.sigma, PLUS))
    bps = list(g.breakpoints[:-1]) + [seam] + list(f.breakpoints[1:])

    return CadlagPath(bps, g.extends_below, f.extends_above)


def truncate(h, z):
    """Return the part of h up to the graph point z. """
    return rotate(restrict(rotate(h), rotate_point(z)))


def _inside_window(t, side, limit):
    if -limit < t < limit:
        return True

    return (t == -limit and side == PLUS) or (t == limit and side == MINUS)


def _modulus_events(f, limit):
    """Sorted (t, side, value) events of f inside the open window. """
    events = []

    for bp in f.breakpoints:
        for side, value in ((MINUS, bp.left), (PLUS, bp.right)):
            if _inside_window(bp.t, side, limit):
                events.append((bp.t, side, value))

    times = set(f.times)

    for t, side in ((-limit, PLUS), (limit, MINUS)):
        if t not in times and f.in_domain(SplitTime(t, side)):
            events.append((t, side, f.value_at(t, side)))

    events.sort(key=lambda event: (event[0], event[1]))

    return events


def _allowed(first, last, delta):
    gap = last[0] - first[0]

    if gap < delta:
        return (first[0], first[1]) < (last[0], last[1])

    return gap == delta and first[1] != MINUS and last[1] != PLUS


def _spread(ymin, ymax, v1, v3):
    return max(0, ymax - max(v1, v3), min(v1, v3) - ymin)


def _slab_value(start, end, t):
    return start[2] + (end[2] - start[2]) * (t - start[0]) / (end[0] - start[0])


def _strictly_between(value, a, b):
    if a == b:
        return value == a

    return min(a, b) < value < max(a, b)


def _forward_scan(events, delta):
    """Best triple whose first point is an event. """
    best = 0
    count = len(events)

    for i in range(count):
        t1, s1, v1 = events[i]
        limit = t1 + delta
        ymin = ymax = None

        for j in range(i + 1, count):
            previous, current = events[j - 1], events[j]
            blocked = not _allowed(events[i], current, delta)

            if ymin is not None and previous[0] < current[0]:
                upper = min(current[0], limit)

                if previous[0] < upper:
                    end_value = _slab_value(previous, current, upper)

                    if _strictly_between(v1, previous[2], end_value):
                        best = max(best, _spread(ymin, ymax, v1, v1))

                    if limit < current[0] and s1 != MINUS:
                        best = max(best, _spread(ymin, ymax, v1, end_value))

            if blocked:
                break

            if ymin is not None:
                best = max(best, _spread(ymin, ymax, v1, current[2]))
                ymin = min(ymin, current[2])
                ymax = max(ymax, current[2])
            else:
                ymin = ymax = current[2]

    return best


def _slab_pair_scan(events, delta):
    """Best triple whose outer points are both interior and delta apart. """
    best = 0
    slabs = [k for k in range(len(events) - 1) if events[k][0] < events[k + 1][0]]

    for p_pos, p in enumerate(slabs):
        p_start, p_end = events[p], events[p + 1]

        for q in slabs[p_pos + 1:]:
            q_start, q_end = events[q], events[q + 1]

            low = max(p_start[0], q_start[0] - delta)
            high = min(p_end[0], q_end[0] - delta)

            if q_start[0] - delta >= p_end[0]:
                break

            if not low < high:
                continue

            gap_low = _slab_value(p_start, p_end, low) - _slab_value(q_start, q_end, low + delta)
            gap_high = _slab_value(p_start, p_end, high) - _slab_value(q_start, q_end, high + delta)

            if gap_low == gap_high or not (min(gap_low, gap_high) < 0 < max(gap_low, gap_high)):
                continue

            root = low + (high - low) * gap_low / (gap_low - gap_high)
            value = _slab_value(p_start, p_end, root)
            middle = [event[2] for event in events[p + 1:q + 1]]

            best = max(best, _spread(min(middle), max(middle), value, value))

    return best


def modulus(f, T, delta):
    """Return the M1 oscillation modulus w_{T,delta}(f).

    The supremum over split time triples a1 < a2 < a3 with times inside
    (-T, T) and t3 - t1 < delta of the distance of f(a2) to the interval
    spanned by f(a1) and f(a3). For piecewise linear paths it is a
    maximum over a finite candidate set: breakpoint sides, the points at
    distance delta from them and the level crossings inside linear
    pieces.

    Raises:
        ParamError if T or delta is not positive.

    """
    if T <= 0 or delta <= 0:
        raise ParamError('modulus needs T > 0 and delta > 0, got T={0} delta={1}'.format(T, delta))

    events = _modulus_events(f, T)
    mirrored = [(-t, -side, -value) for t, side, value in reversed(events)]

    return max(_forward_scan(events, delta),
               _forward_scan(mirrored, delta),
               _slab_pair_scan(events, delta))
