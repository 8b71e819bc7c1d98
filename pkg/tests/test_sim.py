#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Contains test cases for the sim.py module."""

import sys
import os.path
import unittest

from fractions import Fraction

PATH = os.path.realpath(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(os.path.dirname(PATH)))

try:
    import mock
    import numpy as np

    from hypothesis import (
        given,
        settings,
        strategies as st
    )

    from weavekit.paths import (
        CadlagPath,
        GraphPoint
    )
    from weavekit.weave import validate
    from weavekit.order import is_ramified
    from weavekit.sim import (
        HORIZON_TABLE,
        SimParams,
        check_params,
        lattice_grid,
        branch_points,
        coalescing_walk_weave,
        branching_coalescing_weave,
        constant_weave,
        generate,
        rescale,
        jittered_sites,
        coalescence_cdf,
        pair_coalescence_cdf,
        meeting_tick,
        brownian_coalescence_cdf,
        ks_distance,
        sample_coalescence_times,
        lattice_ks_profile,
        convergence_sweep
    )
    from weavekit.errors import (
        EmptySet,
        ParamError,
        TrialError
    )
except ImportError as error:
    print(error)
    sys.exit(1)


HALF = Fraction(1, 2)


def params(seed=0, mesh=HALF, branch_prob=0, window=(1, 1)):
    return SimParams(tuple(Fraction(value) for value in window), mesh, branch_prob, seed)


class TestCheckParams(unittest.TestCase):

    """Test case for the lattice parameter checks."""

    def test_valid(self):
        self.assertIsNone(check_params(params()))

    def test_mesh_does_not_fit(self):
        self.assertRaises(ParamError, check_params, params(mesh=Fraction(2, 5)))

    def test_non_positive_mesh(self):
        self.assertRaises(ParamError, check_params, params(mesh=0))

    def test_branch_prob_range(self):
        self.assertRaises(ParamError, check_params, params(branch_prob=1))
        self.assertRaises(ParamError, check_params, params(branch_prob=-0.1))

    def test_negative_seed(self):
        self.assertRaises(ParamError, check_params, params(seed=-1))


class TestCoalescingWeave(unittest.TestCase):

    """Test case for the coalescing random walk weave."""

    def test_valid_weave(self):
        weave = coalescing_walk_weave(params(seed=5))

        self.assertTrue(validate(weave).valid)
        self.assertEqual(set(weave.grid), set(lattice_grid(params(seed=5))))

    def test_deterministic(self):
        self.assertEqual(coalescing_walk_weave(params(seed=3)), coalescing_walk_weave(params(seed=3)))

    def test_mesh_equals_window_width(self):
        weave = coalescing_walk_weave(params(mesh=2, window=(2, 1)))
        self.assertEqual(len(weave.maximal()), 1)

    def test_rejects_branching(self):
        self.assertRaises(ParamError, coalescing_walk_weave, params(branch_prob=0.2))

    def test_walkers_stay_in_window(self):
        weave = coalescing_walk_weave(params(seed=11))

        for f in weave.paths:
            self.assertTrue(all(abs(value) <= 1 for value in f.values()))

    @settings(max_examples=10, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_rescale(self, seed):
        coarse = coalescing_walk_weave(params(seed=seed))
        fine = coalescing_walk_weave(SimParams((Fraction(1, 4), HALF), Fraction(1, 4), 0, seed))

        self.assertEqual(rescale(coarse, HALF), fine)

    def test_rescale_positive(self):
        self.assertRaises(ParamError, rescale, coalescing_walk_weave(params()), 0)


class TestBranchingWeave(unittest.TestCase):

    """Test case for the branching coalescing weave."""

    def test_no_branching_is_coalescing(self):
        self.assertEqual(branching_coalescing_weave(params(seed=4)), coalescing_walk_weave(params(seed=4)))

    def test_branch_points_are_ramified(self):
        branching = params(seed=2, branch_prob=0.5)
        weave = branching_coalescing_weave(branching)
        points = branch_points(branching)

        self.assertTrue(points)
        self.assertTrue(validate(weave).valid)

        for z in points:
            self.assertTrue(is_ramified(weave, z), z)


class TestGenerators(unittest.TestCase):

    """Test case for the generator table and the jittered sites."""

    def test_constant_weave(self):
        weave = constant_weave(params(mesh=Fraction(1, 4)))

        self.assertEqual(len(weave), 3)
        self.assertTrue(validate(weave).valid)

    def test_constant_is_mesh_independent(self):
        self.assertEqual(generate('constant', params(mesh=HALF)), generate('constant', params(mesh=Fraction(1, 4))))

    def test_unknown_generator(self):
        self.assertRaises(ParamError, generate, 'brownian', params())

    def test_jittered_sites_leave_the_lattice(self):
        weave = coalescing_walk_weave(params(seed=9))
        sites = jittered_sites(weave.grid, HALF, 0.37, weave.window)

        self.assertTrue(sites)
        self.assertFalse(any(is_ramified(weave, z) for z in sites))

    def test_jittered_sites_window(self):
        sites = jittered_sites([GraphPoint(1, 1), GraphPoint(0, 0)], 1, 0.5)
        self.assertEqual(sites, [GraphPoint(1.5, 1.25), GraphPoint(0.5, 0.25)])


class TestCoalescenceLaw(unittest.TestCase):

    """Test case for the coalescence time distribution."""

    def test_exact_cdf(self):
        cdf = coalescence_cdf(1.0, 0.5, 1.0)

        self.assertEqual(len(cdf), 5)
        self.assertEqual(cdf[0], 0.0)
        self.assertAlmostEqual(cdf[1], 0.25)
        self.assertAlmostEqual(cdf[2], 0.375)
        self.assertTrue(np.all(np.diff(cdf) >= 0))

    def test_cdf_rejects_non_positive(self):
        self.assertRaises(ParamError, coalescence_cdf, 0, 0.5, 1)

    def test_brownian_cdf(self):
        values = brownian_coalescence_cdf(1.0, [0.0, 1.0, 1e6])

        self.assertEqual(values[0], 0.0)
        self.assertTrue(0 < values[1] < 1)
        self.assertAlmostEqual(values[2], 1.0, places=2)

    def test_samples_follow_exact_cdf(self):
        samples = sample_coalescence_times(1.0, 0.5, 1.0, 20000, 1)
        cdf = coalescence_cdf(1.0, 0.5, 1.0)

        self.assertLess(ks_distance(samples, cdf, continuous=False), 0.03)

    def test_samples_deterministic(self):
        first = sample_coalescence_times(1.0, 0.25, 1.0, 50, 8)
        second = sample_coalescence_times(1.0, 0.25, 1.0, 50, 8)

        self.assertTrue(np.array_equal(first, second))

    def test_ks_of_perfect_samples(self):
        self.assertEqual(ks_distance([-1, -1], [0.0, 0.0, 0.0], continuous=False), 0.0)

    def test_ks_empty(self):
        self.assertRaises(EmptySet, ks_distance, [], [0.0, 0.5])

    def test_pair_cdf_far_from_walls(self):
        pair = pair_coalescence_cdf(18, 22, 40, 8)
        free = coalescence_cdf(2.0, 0.5, 2.0)

        self.assertTrue(np.allclose(pair, free))

    def test_pair_cdf_between_walls(self):
        self.assertTrue(np.allclose(pair_coalescence_cdf(0, 2, 2, 1), [0.0, 1.0]))

    def test_pair_cdf_rejects_bad_sites(self):
        self.assertRaises(ParamError, pair_coalescence_cdf, 1, 2, 4, 3)
        self.assertRaises(ParamError, pair_coalescence_cdf, 2, 2, 4, 3)
        self.assertRaises(ParamError, pair_coalescence_cdf, 2, 6, 4, 3)

    def test_meeting_tick(self):
        motion = [CadlagPath.continuous([(0, 0), (1, 1)], False, True),
                  CadlagPath.continuous([(0, 2), (1, 1)], False, True)]

        self.assertEqual(meeting_tick(motion, 1, 3), 1)
        self.assertEqual(meeting_tick(motion, 1, 0), -1)

    def test_lattice_ks_profile(self):
        profile = lattice_ks_profile([0.5, 0.25, 0.125], 1.0)

        self.assertEqual([mesh for mesh, _ in profile], [0.5, 0.25, 0.125])
        self.assertLess(profile[-1][1], profile[0][1])


class TestConvergenceSweep(unittest.TestCase):

    """Test case for the convergence sweep."""

    def test_constant_sweep(self):
        report = convergence_sweep('constant', [HALF, Fraction(1, 4)], 1.0, 10)

        self.assertEqual(report.generator, 'constant')
        self.assertEqual([record.ks for record in report.levels], [None, None])
        self.assertEqual([record.successive_distance for record in report.levels], [None, 0.0])
        self.assertEqual([record.ramified_fraction for record in report.levels], [0.0, 0.0])

        for record in report.levels:
            self.assertEqual(record.profile, [0, 0, 0])

    def test_coalescing_sweep(self):
        report = convergence_sweep('coalesce', [HALF, Fraction(1, 4)], 0.5, 200, seed=3, workers_number=2)

        self.assertEqual(len(report.levels), 2)

        for record in report.levels:
            self.assertIsNotNone(record.ks)
            self.assertEqual(len(record.cdf_table), HORIZON_TABLE)
            self.assertEqual(len(record.profile), 3)

    def test_sweep_is_deterministic(self):
        first = convergence_sweep('coalesce', [HALF], 0.5, 100, seed=1, workers_number=1)
        second = convergence_sweep('coalesce', [HALF], 0.5, 100, seed=1, workers_number=1)

        self.assertEqual(first.levels[0].ks, second.levels[0].ks)

    def test_weave_meeting_times_follow_exact_law(self):
        report = convergence_sweep('coalesce', [HALF], 0.5, 10, seed=2, deltas=(), weave_trials=400)
        record = report.levels[0]

        self.assertLess(record.weave_ks, 3 / 400 ** 0.5)
        self.assertEqual(len(record.weave_table), HORIZON_TABLE)

    def test_weave_statistics_only_at_coarse_levels(self):
        report = convergence_sweep('coalesce', [HALF, Fraction(1, 4)], 0.5, 10, deltas=(),
                                   weave_trials=20, weave_mesh=HALF)

        self.assertIsNotNone(report.levels[0].weave_ks)
        self.assertIsNone(report.levels[1].weave_ks)

    @mock.patch('weavekit.sim.sample_coalescence_times', side_effect=ValueError('boom'))
    def test_failed_trials_raise(self, _):
        self.assertRaises(TrialError, convergence_sweep, 'coalesce', [HALF], 0.5, 10, deltas=(),
                          weave_trials=0, workers_number=2)

    @mock.patch('weavekit.sim.run_trials', return_value=[np.zeros(3, dtype=np.int64)])
    def test_missing_samples_raise(self, _):
        self.assertRaises(TrialError, convergence_sweep, 'coalesce', [HALF], 0.5, 10, deltas=(),
                          weave_trials=0)

    def test_levels_must_decrease(self):
        self.assertRaises(ParamError, convergence_sweep, 'coalesce', [0.25, 0.5], 0.5, 10)

    def test_trials_positive(self):
        self.assertRaises(ParamError, convergence_sweep, 'coalesce', [0.5], 0.5, 0)

    def test_unknown_generator(self):
        self.assertRaises(ParamError, convergence_sweep, 'brownian', [0.5], 0.5, 10)


def main():
    unittest.main()


if __name__ == '__main__':
    main()
