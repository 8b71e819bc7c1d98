#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for finite weaves and their operators.

A weave is a finite set of pairwise non-crossing forward paths that
covers a declared grid of space-time points. The module provides the
web and flow operators, Dedekind cuts of the maximal paths and their
boundary paths, dual webs and the reconstruction of a flow from a web
and its dual.

Note:
    Finite path sets are closed, so closures never appear. A weave
    returned by web_op is marked restriction closed: it stands for its
    paths together with all their restrictions.

"""

from collections import namedtuple

import numpy as np

from .splittime import (
    SplitTime,
    MINUS,
    PLUS
)

from .paths import (
    CadlagPath,
    GraphPoint,
    constant_path,
    on_graph,
    restrict,
    rotate,
    rotate_point,
    concat,
    truncate,
    extends
)

from .order import (
    NONE,
    presence,
    classify_crossing,
    left_of,
    sort_by_left_of,
    maximal_elements,
    is_ramified
)

from .errors import (
    CrossesWeave,
    GlueMismatch,
    NotOnPath,
    ParamError,
    RamifiedSeed
)


class Window(namedtuple('Window', 'T X')):

    """Space-time window [-T, T] x [-X, X].

    Values at -X and X stand for minus and plus infinity.

    """

    __slots__ = ()

    def contains(self, z):
        return -self.T <= z.t <= self.T and -self.X <= z.x <= self.X

    def rotate(self):
        return self


DedekindCut = namedtuple('DedekindCut', 'members boundary')


class WeaveReport(namedtuple('WeaveReport', 'crossings uncovered ramified profile')):

    """Diagnostics of a weave.

    Attributes:
        crossings (list): (i, j, kind) for every crossing pair of paths,
            indices into the weave paths.
        uncovered (list): Grid points no path passes through.
        ramified (list): Ramified sample points.
        profile (list): Tightness profile values.

    """

    __slots__ = ()

    def __new__(cls, crossings=(), uncovered=(), ramified=(), profile=()):
        return super(WeaveReport, cls).__new__(cls, list(crossings), list(uncovered),
                                               list(ramified), list(profile))

    @property
    def valid(self):
        return not self.crossings and not self.uncovered


def _grid(points):
    return tuple(sorted(set(GraphPoint(*z) for z in points), key=lambda z: (z.t, z.x)))


class _PathSystem(object):

    """Common part of forward and dual weaves.

    Args:
        window (Window): The space-time window.
        grid (iterable): Declared grid points.
        paths (iterable): The paths.
        restriction_closed (boolean): The weave stands for its paths and
            all their restrictions.

    """

    KIND = None

    def __init__(self, window, grid, paths, restriction_closed=False):
        self.window = Window(*window)
        self.grid = _grid(grid)
        self.paths = tuple(sorted(set(paths), key=CadlagPath.sort_key))
        self.restriction_closed = bool(restriction_closed)
        self._maximal = None

    def maximal(self):
        """Return the maximal paths sorted from left to right. """
        if self._maximal is None:
            self._maximal = tuple(sort_by_left_of(maximal_elements(self.paths)))

        return self._maximal

    def index(self, path):
        return self.paths.index(path)

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __eq__(self, other):
        if not isinstance(other, _PathSystem) or self.KIND != other.KIND:
            return NotImplemented

        return (self.window, self.grid, self.paths) == (other.window, other.grid, other.paths)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.KIND, self.window, self.grid, self.paths))

    def __repr__(self):
        return '{0}(window={1}, grid={2} points, paths={3})'.format(
            self.__class__.__name__, tuple(self.window), len(self.grid), len(self.paths))

    def _rotated(self, cls):
        return cls(self.window,
                   [rotate_point(z) for z in self.grid],
                   [rotate(f) for f in self.paths],
                   self.restriction_closed)


class Weave(_PathSystem):

    """Finite set of forward paths covering a grid. """

    KIND = 'forward'

    def rotate(self):
        """Return the weave rotated by 180 degrees, a DualWeave. """
        return self._rotated(DualWeave)


class DualWeave(_PathSystem):

    """Finite set of backward paths covering a grid. """

    KIND = 'dual'

    def rotate(self):
        return self._rotated(Weave)


def validate(weave):
    """Return the WeaveReport of crossings and uncovered grid points.

    Crossings are looked for among the maximal paths; a sub-path of a
    path crosses only what the path itself crosses.

    """
    maximal = weave.maximal()
    crossings = []

    for i, f in enumerate(maximal):
        for g in maximal[i + 1:]:
            kind = classify_crossing(f, g)

            if kind != NONE:
                crossings.append((weave.index(f), weave.index(g), kind))

    crossings.sort()

    uncovered = [z for z in weave.grid if not any(on_graph(f, z) for f in weave.paths)]

    return WeaveReport(crossings, uncovered)


def paths_through(weave, z):
    """Return the paths of the weave whose interpolated graph holds z. """
    z = GraphPoint(*z)
    return [f for f in weave.paths if on_graph(f, z)]


def restrict_at(weave, points):
    """Return the restrictions of all paths at all points they pass. """
    result = set()

    for z in points:
        z = GraphPoint(*z)
        for f in paths_through(weave, z):
            result.add(restrict(f, z))

    return sorted(result, key=CadlagPath.sort_key)


def _check_seeds(weave, points):
    """Raise RamifiedSeed or NotOnPath for unusable seed points. """
    ramified = [index for index, z in enumerate(points) if is_ramified(weave, z)]

    if ramified:
        raise RamifiedSeed([points[index] for index in ramified], ramified[0])

    for z in points:
        if not paths_through(weave, z):
            raise NotOnPath('seed point ({0}, {1}) is not covered'.format(z.x, z.t))


def web_op(weave, points):
    """Return web_D of the weave for the seed points D.

    Raises:
        ParamError if D is not part of the grid.
        RamifiedSeed if a point of D is ramified.
        NotOnPath if a point of D is not covered.

    """
    points = [GraphPoint(*z) for z in points]
    grid = set(weave.grid)

    outside = [z for z in points if z not in grid]

    if outside:
        raise ParamError('seed points outside the grid: {0}'.format(outside[:5]))

    _check_seeds(weave, points)

    return Weave(weave.window, points, restrict_at(weave, points), restriction_closed=True)


def envelope(members, window):
    """Return the running maximum of the left boundaries of members.

    At every split time the value is the largest member value among the
    members whose left half line is present there, or the window bottom
    when there is none.

    """
    low = -window.X
    times = sorted(set(t for f in members for t in f.times))

    if not times:
        return constant_path(low)

    def value(a):
        present = [f.value_at(*a) for f in members if presence(f, a)[0]]
        return max(present) if present else low

    bps = [(t, value(SplitTime(t, MINUS)), value(SplitTime(t, PLUS))) for t in times]

    return CadlagPath(bps, True, True)


def _check_not_crossing(weave, h):
    for f in weave.maximal():
        kind = classify_crossing(h, f)

        if kind != NONE:
            raise CrossesWeave((h, f, kind))


def _cut_boundary(weave, h):
    """Return the path the boundary path of the cut of h ends up on.

    A boundary constant of the window stands for itself. A bi-infinite
    path has the maximal path it extends, if any. A forward path has the
    first maximal path that extends it, or itself when it lies on none.

    """
    if h in boundary_constants(weave.window):
        return h

    if h.is_bi_infinite:
        for b in weave.maximal():
            if extends(b, h):
                return b

        return None

    for b in weave.maximal():
        if extends(h, b):
            return b

    return h


def dedekind_cut_of(weave, h):
    """Return the Dedekind cut X_h of the maximal paths.

    The members are the maximal paths left of h that are incomparable
    with h. The boundary is the part of the boundary path that the
    members do not determine: None when the boundary path is the
    envelope of the members, otherwise the maximal path (or boundary
    constant) it follows from the initial time of that path on. A
    forward path that lies on a maximal path has the cut of that path.

    Raises:
        CrossesWeave if h crosses a path of the weave.

    """
    _check_not_crossing(weave, h)

    boundary = _cut_boundary(weave, h)

    if not h.is_bi_infinite:
        h = boundary

    members = [f for f in weave.maximal()
               if left_of(f, h) and not extends(f, h) and not extends(h, f)]

    return DedekindCut(tuple(sort_by_left_of(members)), boundary)


def cut_path(weave, cut):
    """Return the boundary path of the cut.

    Before the initial time of the boundary it follows the envelope of
    the members, from there on it follows the boundary.

    """
    e = envelope(cut.members, weave.window)
    boundary = cut.boundary

    if boundary is None:
        return e

    if boundary.extends_below:
        return boundary

    start = boundary.sigma
    before = boundary.initial_left
    after = boundary.value_at(start, PLUS)
    value = e.value_at(start, MINUS)

    if after < before:
        value = max(value, before)

    bps = [bp for bp in e.breakpoints if bp.t < start]
    bps.append((start, value, after))
    bps.extend(boundary.breakpoints[1:])

    return CadlagPath(bps, True, boundary.extends_above)


def extend_backward(weave, f):
    """Return a bi-infinite path of the flow that extends f.

    A forward path on a maximal path g is extended to the flow path of
    g, so all restrictions of g share one extension.

    Raises:
        CrossesWeave if f crosses a path of the weave.

    """
    cut = dedekind_cut_of(weave, f)

    if f.is_bi_infinite:
        return f

    return cut_path(weave, cut)


def boundary_constants(window):
    return [constant_path(-window.X), constant_path(window.X)]


def flow_op(weave):
    """Return the flow of the weave. """
    paths = set(extend_backward(weave, f) for f in weave.maximal())
    paths.update(boundary_constants(weave.window))

    return Weave(weave.window, weave.grid, paths)


def dual_web(weave, points):
    """Return the dual web of the weave for the seed points.

    Every dual path is the past, up to its seed point, of the flow path
    of the maximal path through that point. Gluing the web path of the
    point back on gives that flow path.

    Raises:
        RamifiedSeed if a seed point is ramified.
        NotOnPath if a seed point is not covered.

    """
    points = [GraphPoint(*z) for z in points]

    _check_seeds(weave, points)

    paths = []

    for z in points:
        forward = restrict(paths_through(weave, z)[0], z)
        paths.append(truncate(extend_backward(weave, forward), z))

    return DualWeave(weave.window, points, paths)


def _starting_at(paths, z):
    for f in paths:
        if not f.extends_below and f.initial_point == z:
            return f

    return None


def _ending_at(paths, z):
    for g in paths:
        if not g.extends_above and g.final_point == z:
            return g

    return None


def reconstruct_flow(web, dual, points):
    """Glue dual paths to web paths at the seed points.

    Raises:
        GlueMismatch if a seed point has no web path starting or no dual
            path ending there.
        CrossingAtSeam if a glued pair crosses.

    """
    paths = set(boundary_constants(web.window))

    for z in points:
        z = GraphPoint(*z)
        forward = _starting_at(web.paths, z)
        backward = _ending_at(dual.paths, z)

        if forward is None or backward is None:
            raise GlueMismatch('no matching pair at ({0}, {1})'.format(z.x, z.t))

        paths.add(concat(backward, forward))

    return Weave(web.window, web.grid, paths)


def double_web_report(web, dual):
    """Return the WeaveReport of crossings between web and dual paths.

    Crossing entries are (i, j, kind), i indexing the web paths and j
    the dual paths.

    """
    crossings = []

    for i, f in enumerate(web.paths):
        for j, g in enumerate(dual.paths):
            kind = classify_crossing(f, g)

            if kind != NONE:
                crossings.append((i, j, kind))

    return WeaveReport(crossings)


def regenerate(flow, points):
    """Return the paths of the flow through the points as a weave. """
    paths = set()

    for z in points:
        paths.update(paths_through(flow, z))

    return Weave(flow.window, points, paths)


def _path_values(f, times):
    """Vectorized f(t+) of a bi-infinite path. """
    bp_times = np.array([float(bp.t) for bp in f.breakpoints])
    lefts = np.array([float(bp.left) for bp in f.breakpoints])
    rights = np.array([float(bp.right) for bp in f.breakpoints])

    index = np.searchsorted(bp_times, times, side='right')
    values = np.empty(len(times))

    before = index == 0
    after = index == len(bp_times)
    inside = ~(before | after)

    values[before] = lefts[0]
    values[after] = rights[-1]

    k = index[inside]
    t0, t1 = bp_times[k - 1], bp_times[k]
    values[inside] = rights[k - 1] + (lefts[k] - rights[k - 1]) * (times[inside] - t0) / (t1 - t0)

    return values


def phi_embedding(flow, mu_samples, seed=0):
    """Estimate the normalized area left of every flow path.

    Args:
        flow (Weave): Weave of bi-infinite paths.
        mu_samples (int): Number of uniform window samples.
        seed (int): Seed of the sampler.

    Returns:
        List of (path, phi) sorted from left to right.

    Raises:
        ParamError if a path is not bi-infinite or mu_samples < 1.

    """
    if mu_samples < 1:
        raise ParamError('mu_samples must be positive, got {0}'.format(mu_samples))

    if not all(f.is_bi_infinite for f in flow.paths):
        raise ParamError('phi embedding needs bi-infinite paths')

    T, X = float(flow.window.T), float(flow.window.X)
    generator = np.random.Generator(np.random.Philox(seed))

    times = generator.uniform(-T, T, mu_samples)
    spaces = generator.uniform(-X, X, mu_samples)

    result = []

    for f in sort_by_left_of(flow.paths):
        phi = float(np.mean(spaces < _path_values(f, times)))
        result.append((f, phi))

    return result


def m_particle_motion(weave, points):
    """Return the forward paths from the seed points, in seed order.

    Raises:
        RamifiedSeed with the index of the first ramified seed.
        NotOnPath if a seed is not covered.

    """
    motion = []

    for index, z in enumerate(points):
        z = GraphPoint(*z)

        if is_ramified(weave, z):
            raise RamifiedSeed([z], index)

        through = paths_through(weave, z)

        if not through:
            raise NotOnPath('seed #{0} ({1}, {2}) is not covered'.format(index, z.x, z.t))

        motion.append(restrict(through[0], z))

    return motion


def ramified_fraction(weave, sites):
    """Return the fraction of sample points that are ramified. """
    sites = list(sites)

    if not sites:
        return 0.0

    return sum(1 for z in sites if is_ramified(weave, GraphPoint(*z))) / float(len(sites))
