#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for the compactified plane and the path metrics.

Space-time is squeezed into the box [-1, 1]^2 by

    u = tanh(x) / (1 + |t|),  v = tanh(t)

and measured with the box metric. Both points at t = -inf and t = +inf
collapse to (0, -1) and (0, 1). Graph polylines are mapped into the box
and refined until consecutive points are at most refine apart.

M1 and J1 are discrete Frechet distances between the refined
interpolated and closed graphs, M2 and J2 are exact Hausdorff distances
between the same refined sets. The J variants never refine a jump
segment; J2 drops it from the point set.

"""

import math
from collections import namedtuple
from functools import lru_cache

import numpy as np

from .paths import (
    interpolated_graph,
    closed_graph,
    modulus
)

from .formats import (
    METRICS,
    ORDERED_METRICS,
    JUMP_METRICS
)

from .errors import (
    EmptySet,
    ParamError
)


CompactPlanePoint = namedtuple('CompactPlanePoint', 'u v')

DEFAULT_REFINE = 1e-3

DEFAULT_TOLERANCE = 1e-12


def _squeeze(x, x_max=None):
    """Return tanh(x), values at the window edges +-x_max map to 1 and -1. """
    if x_max is not None:
        if x >= x_max:
            return 1.0
        if x <= -x_max:
            return -1.0

    return math.tanh(float(x))


def compactify(x, t, x_max=None):
    """Map the space-time point (x, t) into the compactified plane.

    Args:
        x (number): Space coordinate.
        t (number): Time, may be -inf or inf.
        x_max (number): Window half width. The values -x_max and x_max
            stand for minus and plus infinity in space.

    """
    t = float(t)

    if math.isinf(t):
        return CompactPlanePoint(0.0, math.copysign(1.0, t))

    return CompactPlanePoint(_squeeze(x, x_max) / (1.0 + abs(t)), math.tanh(t))


def dist_plane(p, q):
    """Box distance between two compactified points. """
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _refine_segment(start, end, t0, t1, eps, blend=None):
    """Return the points of a refined segment, its start excluded.

    The segment is linear in (x, t) from x = start to x = end. With
    blend = (h0, h1) the squeezed space coordinate runs linearly from h0
    to h1 instead; boundary tagged ends use it.

    """
    t0 = float(t0)
    dt = float(t1) - t0

    if blend is None:
        x0, dx = float(start), float(end) - float(start)
        h_rate = abs(dx)
    else:
        h0, h1 = blend
        h_rate = abs(h1 - h0)

    def point(s):
        t = t0 + s * dt
        if blend is None:
            h = math.tanh(x0 + s * dx)
        else:
            h = h0 + s * (h1 - h0)
        return (h / (1.0 + abs(t)), math.tanh(t))

    result = []
    stack = [(0.0, 1.0)]

    while stack:
        a, b = stack.pop()
        ta, tb = t0 + a * dt, t0 + b * dt
        tmin = 0.0 if ta * tb <= 0 else min(abs(ta), abs(tb))
        rate = max(h_rate / (1.0 + tmin) + abs(dt) / (1.0 + tmin) ** 2,
                   abs(dt) / math.cosh(min(tmin, 350.0)) ** 2)

        if (b - a) * rate <= eps or b - a < 1e-15:
            result.append(point(b))
        else:
            middle = (a + b) / 2.0
            stack.append((middle, b))
            stack.append((a, middle))

    return result


def _is_tagged(x, x_max):
    return x_max is not None and abs(x) >= x_max


def _compact_vertex(vertex, x_max):
    t = float(vertex.t)
    return (_squeeze(vertex.x, x_max) / (1.0 + abs(t)), math.tanh(t))


def compact_chain(polyline, refine=DEFAULT_REFINE, refine_gaps=True, x_max=None):
    """Map a graph polyline into the compactified plane.

    Returns:
        (points, gaps): a float array of shape (n, 2) and a boolean array
        of length n - 1 that marks the segments which are not part of
        the set.

    """
    if refine <= 0:
        raise ParamError('refine must be positive, got {0}'.format(refine))

    vertices = polyline.vertices
    points = []
    gaps = []

    def extend(new_points, is_gap=False):
        for point in new_points:
            if points:
                gaps.append(is_gap)
            points.append(point)

    def refine_between(start, end):
        blend = None

        if _is_tagged(start.x, x_max) or _is_tagged(end.x, x_max):
            blend = (_squeeze(start.x, x_max), _squeeze(end.x, x_max))

        return _refine_segment(start.x, end.x, start.t, end.t, refine, blend)

    def tail(vertex, t0, t1):
        h = _squeeze(vertex.x, x_max)
        return _refine_segment(0, 0, t0, t1, refine, (h, h))

    first, last = vertices[0], vertices[-1]
    far = max(abs(float(first.t)), abs(float(last.t))) + 1.0 + 4.0 / refine

    if polyline.tail_below:
        extend([(0.0, -1.0), (_squeeze(first.x, x_max) / (1.0 + far), math.tanh(-far))])
        extend(tail(first, -far, first.t))
    else:
        extend([_compact_vertex(first, x_max)])

    for index in range(len(vertices) - 1):
        start, end = vertices[index], vertices[index + 1]

        if index in polyline.gaps and not refine_gaps:
            extend([_compact_vertex(end, x_max)], True)
        else:
            extend(refine_between(start, end))

    if polyline.tail_above:
        extend(tail(last, last.t, far))
        extend([(0.0, 1.0)])

    return np.array(points, dtype=float), np.array(gaps, dtype=bool)


def discrete_frechet(first, second):
    """Discrete Frechet distance of two point sequences under the box metric.

    The coupling table is filled one anti-diagonal at a time.

    """
    first = np.asarray(first, dtype=float)
    second = np.asarray(second, dtype=float)

    p, q = len(first), len(second)

    if p == 0 or q == 0:
        raise EmptySet('discrete Frechet distance of an empty sequence')

    previous2 = np.full(p + 1, np.inf)
    previous = np.full(p + 1, np.inf)

    for k in range(p + q - 1):
        lo, hi = max(0, k - q + 1), min(k, p - 1)
        i = np.arange(lo, hi + 1)
        j = k - i

        dist = np.max(np.abs(first[i] - second[j]), axis=1)
        current = np.full(p + 1, np.inf)

        if k == 0:
            current[1] = dist[0]
        else:
            reach = np.minimum(np.minimum(previous[i], previous[i + 1]), previous2[i])
            current[i + 1] = np.maximum(dist, reach)

        previous2, previous = previous, current

    return float(previous[p])


def _as_segments(items):
    """Turn points and point chains into (starts, ends) arrays. """
    starts, ends = [], []

    for item in items:
        array = np.asarray(item, dtype=float)

        if array.ndim == 1:
            starts.append(array)
            ends.append(array)
        elif len(array) == 1:
            starts.append(array[0])
            ends.append(array[0])
        else:
            starts.extend(array[:-1])
            ends.extend(array[1:])

    if not starts:
        raise EmptySet('Hausdorff distance of an empty set')

    return np.array(starts), np.array(ends)


def _point_to_segments(point, starts, deltas):
    """Box distances from point to every one of the segments. """
    offset = starts - point
    au, av = offset[:, 0], offset[:, 1]
    du, dv = deltas[:, 0], deltas[:, 1]

    with np.errstate(divide='ignore', invalid='ignore'):
        candidates = [
            np.zeros_like(au),
            np.ones_like(au),
            -au / du,
            -av / dv,
            -(au - av) / (du - dv),
            -(au + av) / (du + dv)
        ]

    best = np.full(len(au), np.inf)

    for lam in candidates:
        lam = np.clip(np.nan_to_num(lam, nan=0.0, posinf=1.0, neginf=0.0), 0.0, 1.0)
        value = np.maximum(np.abs(au + lam * du), np.abs(av + lam * dv))
        best = np.minimum(best, value)

    return best


def _directed_hausdorff(source, target, tol):
    """Largest distance from a point of source to the set target.

    The distance to a single segment is convex along a source segment,
    so on a piece [a, b] it is bounded by the larger of its end values.
    A piece is dropped once the smallest such bound over the target
    segments does not beat the best value found.

    """
    starts, ends = source
    t_starts, t_ends = target
    t_deltas = t_ends - t_starts

    best = 0.0

    for start, end in zip(starts, ends):
        da = _point_to_segments(start, t_starts, t_deltas)
        db = _point_to_segments(end, t_starts, t_deltas)
        best = max(best, float(da.min()), float(db.min()))

        length = float(np.max(np.abs(end - start)))

        if length == 0:
            continue

        stack = [(0.0, 1.0, da, db)]

        while stack:
            a, b, da, db = stack.pop()

            if float(np.min(np.maximum(da, db))) <= best + tol or length * (b - a) <= tol:
                continue

            middle = (a + b) / 2.0
            dm = _point_to_segments(start + middle * (end - start), t_starts, t_deltas)
            best = max(best, float(dm.min()))

            stack.append((a, middle, da, dm))
            stack.append((middle, b, dm, db))

    return best


def hausdorff(first, second, tol=DEFAULT_TOLERANCE):
    """Hausdorff distance of two compact sets under the box metric.

    Args:
        first, second (list): Points (u, v) and chains of points. A chain
            stands for the union of its segments.

        tol (float): Absolute tolerance of the branch and bound search.

    Raises:
        EmptySet if a set is empty.

    """
    source = _as_segments(first)
    target = _as_segments(second)

    return max(_directed_hausdorff(source, target, tol),
               _directed_hausdorff(target, source, tol))


def _chain_items(points, gaps):
    """Split a chain at its gaps into drawn pieces and isolated points. """
    items = []
    current = [points[0]]

    for index, is_gap in enumerate(gaps):
        if is_gap:
            items.append(np.array(current))
            current = [points[index + 1]]
        else:
            current.append(points[index + 1])

    items.append(np.array(current))

    return items


@lru_cache(maxsize=4096)
def _path_chain(f, which, refine, x_max):
    if which in JUMP_METRICS:
        polyline = closed_graph(f)
    else:
        polyline = interpolated_graph(f)

    return compact_chain(polyline, refine, which not in JUMP_METRICS, x_max)


def _check_metric(which):
    if which not in METRICS:
        raise ParamError('unknown metric {0!r}'.format(which))


def dist_path(f, g, which='m1', refine=DEFAULT_REFINE, window=None, tol=DEFAULT_TOLERANCE):
    """Distance between two paths.

    Args:
        f, g (CadlagPath): The paths.
        which (string): One of formats.METRICS.
        refine (float): Refinement resolution in compactified units.
        window (Window): If given, values at the window edge stand for
            minus and plus infinity.
        tol (float): Tolerance of the Hausdorff kernel.

    """
    _check_metric(which)

    x_max = window.X if window is not None else None

    f_points, f_gaps = _path_chain(f, which, refine, x_max)
    g_points, g_gaps = _path_chain(g, which, refine, x_max)

    if which in ORDERED_METRICS:
        return discrete_frechet(f_points, g_points)

    return hausdorff(_chain_items(f_points, f_gaps), _chain_items(g_points, g_gaps), tol)


def dist_path_sets(first, second, which='m1', refine=DEFAULT_REFINE, window=None, tol=DEFAULT_TOLERANCE):
    """Hausdorff distance over dist_path between two finite path sets.

    Raises:
        EmptySet if a set is empty.

    """
    first, second = list(first), list(second)

    if not first or not second:
        raise EmptySet('path set distance of an empty set')

    table = np.array([[dist_path(f, g, which, refine, window, tol) for g in second] for f in first])

    return float(max(table.min(axis=1).max(), table.min(axis=0).max()))


def tightness_profile(paths, T, deltas):
    """Return sup_f w_{T,delta}(f) for every delta.

    Raises:
        ParamError unless T > 0 and the deltas are positive and
        strictly decreasing.

    """
    deltas = list(deltas)

    if T <= 0:
        raise ParamError('T must be positive, got {0}'.format(T))

    if not deltas or any(delta <= 0 for delta in deltas):
        raise ParamError('deltas must be positive')

    if any(deltas[index + 1] >= deltas[index] for index in range(len(deltas) - 1)):
        raise ParamError('deltas must be strictly decreasing')

    paths = list(paths)

    return [max([modulus(f, T, delta) for f in paths] or [0]) for delta in deltas]
