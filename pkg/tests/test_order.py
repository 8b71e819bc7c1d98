#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Contains test cases for the order.py module."""

import sys
import os.path
import unittest

from fractions import Fraction

PATH = os.path.realpath(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(os.path.dirname(PATH)))

try:
    from weavekit.splittime import (
        minus,
        plus
    )
    from weavekit.paths import (
        CadlagPath,
        GraphPoint,
        constant_path
    )
    from weavekit.order import (
        NONE,
        LEFT_TO_RIGHT,
        RIGHT_TO_LEFT,
        presence,
        side_profile,
        left_of,
        classify_crossing,
        crossing_witness,
        non_crossing,
        eps_cross,
        witness_extensions,
        left_of_by_witness,
        sort_by_left_of,
        maximal_elements,
        coverage_order,
        is_ramified
    )
    from weavekit.errors import ParamError
except ImportError as error:
    print(error)
    sys.exit(1)


class TestPresence(unittest.TestCase):

    """Test case for the L/R half lines of a path."""

    def test_interior_split_time(self):
        self.assertEqual(presence(constant_path(0), minus(3)), (True, True))

    def test_initial_rightwards_jump(self):
        f = CadlagPath([(0, 0, 1)], False, True)

        self.assertEqual(presence(f, minus(0)), (False, True))
        self.assertEqual(presence(f, plus(0)), (True, True))

    def test_final_leftwards_jump(self):
        f = CadlagPath([(0, 1, 0)], True, False)
        self.assertEqual(presence(f, plus(0)), (False, True))

    def test_outside_domain(self):
        self.assertEqual(presence(constant_path(0, 1), plus(0)), (False, False))

    def test_side_profile(self):
        f = CadlagPath([(0, 0, 1)], False, True)
        profile = side_profile(f)

        self.assertEqual(profile[0].L_bound, None)
        self.assertEqual(profile[0].R_bound, 0)
        self.assertEqual(profile[1].L_bound, 1)


class TestCrossing(unittest.TestCase):

    """Test case for left_of and the crossing classification."""

    def setUp(self):
        self.zero = constant_path(0)
        self.one = constant_path(1)
        self.rising = CadlagPath.continuous([(0, 0), (1, 2)], True, True)
        self.merging = CadlagPath.continuous([(0, 0), (1, 1)], True, True)

    def test_constants(self):
        self.assertTrue(left_of(self.zero, self.one))
        self.assertFalse(left_of(self.one, self.zero))
        self.assertEqual(classify_crossing(self.zero, self.one), NONE)

    def test_crossing_directions(self):
        self.assertEqual(classify_crossing(self.rising, self.one), LEFT_TO_RIGHT)
        self.assertEqual(classify_crossing(self.one, self.rising), RIGHT_TO_LEFT)
        self.assertFalse(non_crossing(self.rising, self.one))

    def test_crossing_witness(self):
        upper, lower = crossing_witness(self.rising, self.one)

        self.assertTrue(self.rising.value_at(*upper) > self.one.value_at(*upper))
        self.assertTrue(self.rising.value_at(*lower) < self.one.value_at(*lower))

    def test_coalescing_paths_do_not_cross(self):
        self.assertEqual(classify_crossing(self.merging, self.one), NONE)
        self.assertTrue(left_of(self.merging, self.one))
        self.assertFalse(left_of(self.one, self.merging))

    def test_disjoint_domains(self):
        early = CadlagPath.continuous([(0, 5), (1, 5)])
        late = constant_path(0, 2)

        self.assertTrue(left_of(early, late))
        self.assertTrue(left_of(late, early))

    def test_left_of_is_not_transitive(self):
        f = CadlagPath([(0, Fraction(1, 2), Fraction(-1, 2))], False, True)
        g = constant_path(0, 1)
        h = CadlagPath([(0, Fraction(-1, 2), Fraction(1, 2))], False, True)

        self.assertEqual((left_of(f, g), left_of(g, h), left_of(f, h)), (True, True, False))


class TestEpsCross(unittest.TestCase):

    """Test case for the eps_cross function."""

    def setUp(self):
        self.down = CadlagPath([(0, 1, 0)], False, True)
        self.up = CadlagPath([(0, 0, 1)], False, True)

    def test_jumps_cross(self):
        self.assertTrue(eps_cross(self.down, self.up, 1))

    def test_eps_too_large(self):
        self.assertFalse(eps_cross(self.down, self.up, 2))

    def test_bi_infinite_pair(self):
        self.assertFalse(eps_cross(constant_path(0), constant_path(1), Fraction(1, 2)))

    def test_invalid_eps(self):
        self.assertRaises(ParamError, eps_cross, self.down, self.up, 0)


class TestWitnessExtensions(unittest.TestCase):

    """Test case for the witness extension oracle."""

    def test_ordered_starts(self):
        f, g = constant_path(0, 0), constant_path(1, 0)
        f_ext, g_ext = witness_extensions(f, g)

        self.assertTrue(f_ext.is_bi_infinite and g_ext.is_bi_infinite)
        self.assertTrue(left_of_by_witness(f, g))
        self.assertFalse(left_of_by_witness(g, f))

    def test_later_start_copies_moves(self):
        f = CadlagPath.continuous([(0, 0), (1, 2)], False, True)
        g = constant_path(3, Fraction(1, 2))

        self.assertTrue(left_of_by_witness(f, g))
        self.assertEqual(left_of_by_witness(f, g), left_of(f, g))

    def test_backward_paths_rejected(self):
        f = CadlagPath([(0, 0, 0)], True, False)
        self.assertRaises(ParamError, witness_extensions, f, constant_path(1))


class TestFamilies(unittest.TestCase):

    """Test case for the functions on path families."""

    def setUp(self):
        self.zero = constant_path(0)
        self.branch = CadlagPath.continuous([(0, 0), (1, 1)], False, True)

    def test_sort_by_left_of(self):
        family = [constant_path(2), self.zero, constant_path(1)]
        self.assertEqual(sort_by_left_of(family), [self.zero, constant_path(1), constant_path(2)])

    def test_maximal_elements(self):
        family = [self.zero, constant_path(0, 1), constant_path(0, 2)]
        self.assertEqual(maximal_elements(family), [self.zero])

    def test_ramified_at_branch(self):
        family = [self.zero, self.branch]

        self.assertTrue(is_ramified(family, GraphPoint(0, 0)))
        self.assertFalse(is_ramified(family, GraphPoint(0, -1)))
        self.assertFalse(is_ramified(family, GraphPoint(0, Fraction(1, 2))))

    def test_restrictions_are_not_ramified(self):
        family = [self.zero, constant_path(0, 0)]
        self.assertFalse(is_ramified(family, GraphPoint(0, 1)))

    def test_coverage_order(self):
        family = [self.zero, self.branch]
        restricted = [constant_path(0, 1)]

        self.assertTrue(coverage_order(family, family))
        self.assertTrue(coverage_order(restricted, family))
        self.assertFalse(coverage_order(family, restricted))


def main():
    unittest.main()


if __name__ == '__main__':
    main()
