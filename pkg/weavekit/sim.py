#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for random weaves and their convergence diagnostics.

Walkers live on the parity lattice of a window: at tick k the sites are
the positions x_j = -X + j * mesh with j + k even, and time advances by
mesh ** 2 per tick. A walker steps by one mesh to the left or right, the
window edges reflect. All walkers at a site take the same step, so
walkers that meet share their future and coalesced paths are equal
after the meeting point.

The randomness of tick k comes from a Philox generator keyed by the seed
with k in the counter, so every weave is a pure function of its
parameters.

Attributes:
    HORIZON_TABLE (int): Number of time points in the per level CDF
        tables of a ConvergenceReport.

    WEAVE_TRIALS (int): Default number of generated weaves per level
        whose two particle motions are sampled.

"""

import math
import itertools
from collections import namedtuple

import numpy as np
from scipy.special import erfc

from .splittime import PLUS

from .paths import (
    CadlagPath,
    GraphPoint,
    constant_path
)

from .weave import (
    Window,
    Weave,
    m_particle_motion,
    ramified_fraction
)

from .metrics import (
    DEFAULT_REFINE,
    dist_path_sets,
    tightness_profile
)

from .trialmanager import run_trials
from .formats import GENERATORS
from .utils import to_exact

from .errors import (
    EmptySet,
    ParamError,
    TrialError,
    WeaveError
)


HORIZON_TABLE = 10

WEAVE_TRIALS = 100


SimParams = namedtuple('SimParams', 'window mesh branch_prob seed')

LevelRecord = namedtuple('LevelRecord',
                         'mesh ks cdf_table profile ramified_fraction successive_distance '
                         'weave_ks weave_table')
LevelRecord.__new__.__defaults__ = (None, ())

ConvergenceReport = namedtuple('ConvergenceReport', 'generator distance trials deltas levels')


class _Lattice(object):

    """Exact geometry of the parity lattice of a SimParams. """

    def __init__(self, params):
        check_params(params)

        self.T = to_exact(params.window[0])
        self.X = to_exact(params.window[1])
        self.mesh = to_exact(params.mesh)
        self.step = self.mesh * self.mesh

        self.columns = int(2 * self.X / self.mesh)
        self.ticks = int(2 * self.T / self.step)

    def time(self, k):
        return -self.T + k * self.step

    def space(self, j):
        return -self.X + j * self.mesh

    def point(self, j, k):
        return GraphPoint(self.space(j), self.time(k))

    def sites(self, k):
        return range(k % 2, self.columns + 1, 2)


def check_params(params):
    """Raise ParamError unless the parameters describe a lattice.

    The mesh must be positive, 2X a multiple of the mesh, 2T a multiple
    of mesh ** 2 and the branching probability in [0, 1).

    """
    try:
        T, X = (to_exact(value) for value in params.window)
        mesh = to_exact(params.mesh)
    except (TypeError, ValueError):
        raise ParamError('window and mesh must be numbers')

    if mesh <= 0 or T <= 0 or X <= 0:
        raise ParamError('window and mesh must be positive')

    if (2 * X / mesh).denominator != 1 or (2 * T / (mesh * mesh)).denominator != 1:
        raise ParamError('window {0} does not fit the mesh {1}'.format(tuple(params.window), params.mesh))

    if not 0 <= params.branch_prob < 1:
        raise ParamError('branch_prob must be in [0, 1), got {0}'.format(params.branch_prob))

    if params.seed < 0:
        raise ParamError('seed must not be negative')


def tick_generator(seed, tick):
    """Return the Philox generator of one tick."""
    return np.random.Generator(np.random.Philox(key=seed, counter=[0, tick, 0, 0]))


def _moves(lattice, params):
    """Return the steps and branch flags of every tick.

    Walls force the step back into the window and never branch.

    """
    size = lattice.columns + 1
    steps, branches = [], []

    for k in range(lattice.ticks):
        generator = tick_generator(params.seed, k)

        step = 2 * generator.integers(0, 2, size=size) - 1
        branch = generator.random(size) < params.branch_prob

        step[0] = 1
        step[-1] = -1
        branch[0] = branch[-1] = False

        steps.append(step.tolist())
        branches.append(branch.tolist())

    return steps, branches


def _walk(lattice, steps, j, k):
    """Return the path of the walker started at site (j, k). """
    if k == lattice.ticks:
        return constant_path(lattice.space(j), lattice.time(k))

    points = [(lattice.time(k), lattice.space(j))]
    direction = steps[k][j]

    while k < lattice.ticks:
        if steps[k][j] != direction:
            points.append((lattice.time(k), lattice.space(j)))
            direction = steps[k][j]

        j += steps[k][j]
        k += 1

    points.append((lattice.time(k), lattice.space(j)))

    return CadlagPath.continuous(points, False, True)


def _branch_walk(lattice, steps, j, k):
    """Return the path that leaves (j, k) against the site's step. """
    alternate = j - steps[k][j]
    follow = _walk(lattice, steps, alternate, k + 1)
    start = (lattice.time(k), lattice.space(j), lattice.space(j))

    return CadlagPath([start] + list(follow.breakpoints), False, True)


def lattice_grid(params):
    """Return every site of the lattice. """
    lattice = _Lattice(params)
    return [lattice.point(j, k) for k in range(lattice.ticks + 1) for j in lattice.sites(k)]


def branch_points(params):
    """Return the sites where a walker duplicates. """
    lattice = _Lattice(params)
    _, branches = _moves(lattice, params)

    return [lattice.point(j, k)
            for k in range(lattice.ticks) for j in lattice.sites(k) if branches[k][j]]


def _lattice_weave(params):
    lattice = _Lattice(params)
    steps, branches = _moves(lattice, params)

    paths = []

    for k in range(lattice.ticks + 1):
        for j in lattice.sites(k):
            paths.append(_walk(lattice, steps, j, k))

            if k < lattice.ticks and branches[k][j]:
                paths.append(_branch_walk(lattice, steps, j, k))

    return Weave(Window(lattice.T, lattice.X), lattice_grid(params), paths)


def coalescing_walk_weave(params):
    """Return the coalescing random walk weave of the lattice.

    Raises:
        ParamError for invalid parameters or branch_prob != 0.

    """
    check_params(params)

    if params.branch_prob != 0:
        raise ParamError('coalescing walks do not branch, got branch_prob={0}'.format(params.branch_prob))

    return _lattice_weave(params)


def branching_coalescing_weave(params):
    """Return the branching coalescing random walk weave.

    At a branch site a second path leaves against the site's step and
    follows the walkers from there on. With branch_prob = 0 the weave
    equals the coalescing one of the same seed.

    """
    check_params(params)
    return _lattice_weave(params)


def constant_weave(params):
    """Return the mesh independent weave of the constants -X, 0 and X. """
    T, X = (to_exact(value) for value in params.window)

    if T <= 0 or X <= 0:
        raise ParamError('window must be positive')

    levels = (-X, 0 * X, X)
    grid = [GraphPoint(x, t) for x in levels for t in (-T, T)]

    return Weave(Window(T, X), grid, [constant_path(x) for x in levels])


_GENERATORS = {
    'coalesce': coalescing_walk_weave,
    'branch': branching_coalescing_weave,
    'constant': constant_weave
}


def generate(name, params):
    """Run the generator with the given formats.GENERATORS key. """
    if name not in GENERATORS:
        raise ParamError('unknown generator {0!r}'.format(name))

    return _GENERATORS[name](params)


def rescale(weave, a):
    """Apply the diffusive scaling x -> a x, t -> a ** 2 t.

    Raises:
        ParamError unless a > 0.

    """
    if a <= 0:
        raise ParamError('scale must be positive, got {0}'.format(a))

    a = to_exact(a)
    b = a * a

    paths = [CadlagPath([(b * bp.t, a * bp.left, a * bp.right) for bp in f.breakpoints],
                        f.extends_below, f.extends_above)
             for f in weave.paths]
    grid = [GraphPoint(a * z.x, b * z.t) for z in weave.grid]
    window = Window(b * weave.window.T, a * weave.window.X)

    return type(weave)(window, grid, paths, weave.restriction_closed)


def jittered_sites(points, mesh, jitter, window=None):
    """Shift every point by (jitter * mesh, jitter ** 2 * mesh ** 2).

    Lattice paths move by one mesh per mesh ** 2 of time, so for jitter
    in (0, 1) other than the golden section a shifted site lies on no
    lattice segment.

    """
    mesh, jitter = float(mesh), float(jitter)
    sites = [GraphPoint(float(z.x) + jitter * mesh, float(z.t) + jitter * jitter * mesh * mesh)
              for z in points]

    if window is not None:
        sites = [z for z in sites if abs(z.x) <= window.X and abs(z.t) <= window.T]

    return sites


def _units(distance, mesh):
    return max(1, int(round(float(distance) / (2.0 * float(mesh)))))


def _horizon_ticks(mesh, horizon):
    return int(math.floor(float(horizon) / (float(mesh) ** 2)))


def coalescence_cdf(distance, mesh, horizon):
    """Exact coalescence time CDF of two lattice walkers.

    The gap of two walkers 2 m meshes apart performs a lazy walk in
    units of two meshes (down, stay, up with 1/4, 1/2, 1/4) absorbed at
    0. The distribution is propagated tick by tick.

    Returns:
        Array of P(tau <= k) for the ticks k = 0 .. horizon / mesh ** 2.

    """
    if mesh <= 0 or horizon <= 0 or distance <= 0:
        raise ParamError('distance, mesh and horizon must be positive')

    start = _units(distance, mesh)
    ticks = _horizon_ticks(mesh, horizon)

    state = np.zeros(start + ticks + 2)
    state[start] = 1.0
    absorbed = 0.0

    cdf = np.zeros(ticks + 1)

    for k in range(1, ticks + 1):
        absorbed += 0.25 * state[1]

        moved = 0.5 * state
        moved[1:-1] += 0.25 * (state[:-2] + state[2:])
        moved[0] = 0.0

        state = moved
        cdf[k] = absorbed

    return cdf


def brownian_coalescence_cdf(distance, times):
    """P(two standard Brownian motions distance apart met by time t).

    Their difference is a Brownian motion of variance 2t, so the first
    passage CDF is erfc(distance / (2 sqrt(t))).

    """
    times = np.asarray(times, dtype=float)
    safe = np.where(times > 0, times, 1.0)

    return np.where(times > 0, erfc(float(distance) / (2.0 * np.sqrt(safe))), 0.0)


def ks_distance(samples, cdf_ticks, continuous=True):
    """Kolmogorov distance of coalescence tick samples to a reference.

    Args:
        samples (array): Coalescence ticks, -1 for walkers that did not
            meet within the horizon.
        cdf_ticks (array): Reference CDF at the ticks 0 .. n.
        continuous (boolean): The reference is continuous in time, so
            the empirical step function is also compared against the
            left limit of the reference at the next tick.

    Raises:
        EmptySet if there are no samples.

    """
    samples = np.asarray(samples)
    cdf_ticks = np.asarray(cdf_ticks, dtype=float)

    if samples.size == 0:
        raise EmptySet('no samples')

    ticks = len(cdf_ticks) - 1
    met = samples[(samples >= 0) & (samples <= ticks)]
    counts = np.bincount(met.astype(int), minlength=ticks + 1)
    empirical = np.cumsum(counts) / float(samples.size)

    distance = np.max(np.abs(empirical - cdf_ticks))

    if continuous and ticks > 0:
        distance = max(distance, np.max(np.abs(empirical[:-1] - cdf_ticks[1:])))

    return float(distance)


def sample_coalescence_times(distance, mesh, horizon, trials, seed):
    """Simulate the meeting tick of two lattice walkers.

    Returns:
        Integer array of meeting ticks, -1 where the walkers are still
        apart at the horizon.

    """
    if trials < 1:
        raise ParamError('trials must be positive, got {0}'.format(trials))

    generator = np.random.Generator(np.random.Philox(key=seed))

    gap = np.full(trials, _units(distance, mesh), dtype=np.int64)
    met = np.full(trials, -1, dtype=np.int64)

    for k in range(1, _horizon_ticks(mesh, horizon) + 1):
        alive = met < 0

        if not alive.any():
            break

        first = generator.integers(0, 2, size=trials)
        second = generator.integers(0, 2, size=trials)

        gap[alive] += (second - first)[alive]
        met[alive & (gap == 0)] = k

    return met


def lattice_ks_profile(levels, distance, horizon=1.0):
    """Exact Kolmogorov distance of the lattice law to the Brownian one.

    Returns:
        List of (mesh, ks) pairs.

    """
    profile = []

    for mesh in levels:
        cdf = coalescence_cdf(distance, mesh, horizon)
        times = np.arange(len(cdf)) * float(mesh) ** 2
        oracle = brownian_coalescence_cdf(distance, times)

        distance_here = max(np.max(np.abs(cdf - oracle)),
                            np.max(np.abs(cdf[:-1] - oracle[1:])) if len(cdf) > 1 else 0.0)
        profile.append((mesh, float(distance_here)))

    return profile


def pair_coalescence_cdf(first, second, columns, ticks):
    """Exact coalescence tick CDF of two walkers between reflecting walls.

    The walkers start at the sites first < second of a lattice with
    columns + 1 sites, step like the walkers of a generated weave and
    stop at their first meeting. The law of the pair is propagated tick
    by tick with the transition matrix of a single walker.

    Returns:
        Array of P(tau <= k) for the ticks k = 0 .. ticks.

    Raises:
        ParamError unless the sites are distinct lattice sites of equal
        parity.

    """
    if not 0 <= first < second <= columns or (second - first) % 2:
        raise ParamError('sites {0} and {1} are not a walker pair'.format(first, second))

    size = columns + 1
    move = np.zeros((size, size))

    for j in range(1, columns):
        move[j, j - 1] = move[j, j + 1] = 0.5

    move[0, 1] = move[columns, columns - 1] = 1.0

    state = np.zeros((size, size))
    state[first, second] = 1.0
    absorbed = 0.0

    cdf = np.zeros(ticks + 1)

    for k in range(1, ticks + 1):
        state = move.T.dot(state).dot(move)

        absorbed += np.trace(state)
        np.fill_diagonal(state, 0.0)

        cdf[k] = absorbed

    return cdf


def meeting_tick(motion, mesh, ticks):
    """Return the first lattice tick at which two motion paths coincide.

    Returns:
        The tick counted from the common initial time, -1 when the paths
        are still apart after the given number of ticks.

    """
    first, second = motion
    start = max(first.sigma, second.sigma)
    step = to_exact(mesh) ** 2

    for k in range(ticks + 1):
        t = start + k * step

        if first.value_at(t, PLUS) == second.value_at(t, PLUS):
            return k

    return -1


def trial_seed(seed, trial):
    """Return the generator seed of one trial of a sweep. """
    return (int(seed) << 32) | int(trial)


def _batch_sizes(trials, workers_number):
    batches = max(1, min(int(workers_number), trials))
    return [trials // batches + (1 if index < trials % batches else 0) for index in range(batches)]


def _sample_batch(batch_seed, distance, mesh, horizon, sizes, seed):
    return sample_coalescence_times(distance, mesh, horizon, sizes[batch_seed], [seed, batch_seed])


def _weave_batch(batch_seed, generator, params, points, ticks, sizes):
    """Meeting ticks of the two particle motions of generated weaves. """
    first = sum(sizes[:batch_seed])
    ticks_met = []

    for trial in range(first, first + sizes[batch_seed]):
        weave = generate(generator, params._replace(seed=trial_seed(params.seed, trial)))
        ticks_met.append(meeting_tick(m_particle_motion(weave, points), params.mesh, ticks))

    return np.asarray(ticks_met, dtype=np.int64)


def _run_batches(function, sizes, params, trials, workers_number, log_manager):
    samples = np.concatenate(run_trials(function, range(len(sizes)), params,
                                        workers_number, log_manager))

    if samples.size != trials:
        raise TrialError([], 'expected {0} samples, got {1}'.format(trials, samples.size))

    return samples


def _seed_points(weave, distance):
    """Two grid points at the earliest grid time, about distance apart.

    Raises:
        EmptySet if the earliest grid time holds a single point.

    """
    start = min(z.t for z in weave.grid)
    row = sorted((z for z in weave.grid if z.t == start), key=lambda z: z.x)

    if len(row) < 2:
        raise EmptySet('no two seed points at time {0}'.format(start))

    half = float(distance) / 2.0

    def miss(pair):
        left, right = pair
        return abs(float(left.x) + half) + abs(float(right.x) - half), float(left.x)

    return list(min(itertools.combinations(row, 2), key=miss))


def _cdf_table(samples, reference, mesh, horizon):
    """(t, empirical, reference) rows at HORIZON_TABLE times up to horizon. """
    last = len(reference) - 1
    table = []

    for index in range(1, HORIZON_TABLE + 1):
        t = horizon * index / float(HORIZON_TABLE)
        tick = min(_horizon_ticks(mesh, t), last)
        empirical = float(np.mean((samples >= 0) & (samples <= tick)))
        table.append((t, empirical, float(reference[tick])))

    return table


def _weave_statistics(weave, generator, params, distance, horizon, weave_trials,
                      workers_number, log_manager):
    """Kolmogorov distance and CDF table of meeting times in generated weaves.

    The seed points are the ones of the sweep and the reference is the
    exact law of two walkers between the walls of the lattice.

    """
    lattice = _Lattice(params)

    try:
        points = _seed_points(weave, distance)
    except EmptySet:
        return None, ()

    first, second = (int((z.x + lattice.X) / lattice.mesh) for z in points)
    ticks = min(_horizon_ticks(params.mesh, horizon), lattice.ticks)

    sizes = _batch_sizes(weave_trials, workers_number)
    samples = _run_batches(_weave_batch, sizes, (generator, params, points, ticks, sizes),
                           weave_trials, workers_number, log_manager)

    exact = pair_coalescence_cdf(first, second, lattice.columns, ticks)

    return (ks_distance(samples, exact, continuous=False),
            _cdf_table(samples, exact, params.mesh, min(horizon, 2 * float(lattice.T))))


def convergence_sweep(generator, levels, distance, trials, seed=0, window=(1, 1),
                      deltas=(0.5, 0.25, 0.125), horizon=None, branch_prob=0,
                      jitter=0.37, workers_number=1, log_manager=None,
                      refine=DEFAULT_REFINE, weave_trials=WEAVE_TRIALS,
                      weave_mesh=0.25):
    """Run the convergence diagnostics over decreasing meshes.

    For every mesh the generator builds one weave of the given seed.
    The level record holds the Kolmogorov distance of the simulated
    coalescence times of two walkers distance apart to the Brownian
    first passage law, a CDF table, the tightness profile of the maximal
    paths, the ramified fraction on jittered sites and the M1 distance
    of the two particle motion to the one of the previous level.

    For coalescing walks at meshes of at least weave_mesh the record
    also holds the Kolmogorov distance and CDF table of the meeting
    times of the two particle motions of weave_trials generated weaves,
    measured against the exact walled lattice law.

    Raises:
        ParamError unless the levels are positive and strictly
        decreasing and trials >= 1.
        TrialError if a trial fails.

    """
    levels = list(levels)

    if not levels or any(mesh <= 0 for mesh in levels):
        raise ParamError('levels must be positive')

    if any(levels[index + 1] >= levels[index] for index in range(len(levels) - 1)):
        raise ParamError('levels must be strictly decreasing')

    if trials < 1:
        raise ParamError('trials must be positive, got {0}'.format(trials))

    if weave_trials < 0:
        raise ParamError('weave_trials must not be negative, got {0}'.format(weave_trials))

    if generator not in GENERATORS:
        raise ParamError('unknown generator {0!r}'.format(generator))

    window = Window(*(to_exact(value) for value in window))

    if horizon is None:
        horizon = 2 * float(window.T)

    records = []
    previous = None

    for mesh in levels:
        params = SimParams(window, mesh, branch_prob, seed)
        weave = generate(generator, params)

        ks, table = None, []
        weave_ks, weave_table = None, ()

        if generator != 'constant':
            sizes = _batch_sizes(trials, workers_number)
            samples = _run_batches(_sample_batch, sizes, (distance, mesh, horizon, sizes, seed),
                                   trials, workers_number, log_manager)

            ticks = _horizon_ticks(mesh, horizon)
            oracle = brownian_coalescence_cdf(distance, np.arange(ticks + 1) * float(mesh) ** 2)

            ks = ks_distance(samples, oracle)
            table = _cdf_table(samples, oracle, mesh, horizon)

        if generator == 'coalesce' and weave_trials and mesh >= weave_mesh:
            weave_ks, weave_table = _weave_statistics(weave, generator, params, distance, horizon,
                                                      weave_trials, workers_number, log_manager)

        profile = tightness_profile(weave.maximal(), window.T, deltas) if deltas else []

        sites = jittered_sites(weave.grid, mesh, jitter, window)
        fraction = ramified_fraction(weave, sites)

        try:
            motion = m_particle_motion(weave, _seed_points(weave, distance))
        except WeaveError:
            motion = None

        successive = None

        if motion is not None and previous is not None:
            successive = dist_path_sets(previous, motion, 'm1', refine, window)

        previous = motion

        records.append(LevelRecord(mesh, ks, table, list(profile), fraction, successive,
                                   weave_ks, tuple(weave_table)))

    return ConvergenceReport(generator, distance, trials, tuple(deltas), records)
