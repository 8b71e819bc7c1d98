#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Contains test cases for the paths.py module."""

import sys
import os.path
import unittest

from fractions import Fraction

PATH = os.path.realpath(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(os.path.dirname(PATH)))

try:
    from hypothesis import given, strategies as st

    from weavekit.splittime import (
        MINUS,
        PLUS,
        minus,
        plus
    )
    from weavekit.paths import (
        Breakpoint,
        CadlagPath,
        GraphPoint,
        constant_path,
        interpolated_graph,
        closed_graph,
        jump_range,
        on_graph,
        graph_before,
        restrict,
        restrict_span,
        extends,
        rotate,
        concat,
        truncate,
        modulus,
        eval as path_eval
    )
    from weavekit.errors import (
        DomainError,
        NotOnPath,
        OrderViolation,
        GlueMismatch,
        ParamError
    )
except ImportError as error:
    print(error)
    sys.exit(1)


HALF = Fraction(1, 2)


@st.composite
def cadlag_paths(draw):
    times = sorted(draw(st.sets(st.integers(-8, 8), min_size=1, max_size=5)))
    values = draw(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)),
                           min_size=len(times), max_size=len(times)))

    bps = [(Fraction(t, 2), Fraction(left), Fraction(right)) for t, (left, right) in zip(times, values)]

    return CadlagPath(bps, draw(st.booleans()), draw(st.booleans()))


class TestCadlagPath(unittest.TestCase):

    """Test case for the CadlagPath object."""

    def setUp(self):
        self.step = CadlagPath([(-1, 0, 0), (0, 0, 1), (1, 1, 1)])
        self.ramp = CadlagPath.continuous([(0, 0), (2, 2)])

    def test_value_at_jump(self):
        self.assertEqual(self.step.value_at(0, MINUS), 0)
        self.assertEqual(self.step.value_at(0, PLUS), 1)

    def test_value_at_interpolates(self):
        self.assertEqual(self.ramp.value_at(1, PLUS), 1)
        self.assertEqual(self.step.value_at(HALF, MINUS), 1)

    def test_eval_split_time(self):
        self.assertEqual(path_eval(self.step, minus(0)), 0)
        self.assertEqual(path_eval(self.step, plus(0)), 1)

    def test_value_outside_domain(self):
        self.assertRaises(DomainError, self.step.value_at, 2, PLUS)
        self.assertRaises(DomainError, self.step.value_at, -2, MINUS)

    def test_flags_continue_constantly(self):
        f = CadlagPath([(0, 1, 2)], True, True)

        self.assertEqual(f.value_at(-10, PLUS), 1)
        self.assertEqual(f.value_at(10, MINUS), 2)

    def test_collinear_breakpoints_dropped(self):
        f = CadlagPath.continuous([(0, 0), (1, 1), (2, 2)])
        self.assertEqual(f.breakpoints, (Breakpoint(0, 0, 0), Breakpoint(2, 2, 2)))

    def test_bi_infinite_constant_is_canonical(self):
        f = CadlagPath([(-1, 3, 3), (2, 3, 3)], True, True)
        self.assertEqual(f, constant_path(3))

    def test_forward_constant(self):
        f = constant_path(2, -1)

        self.assertEqual(f.sigma, -1)
        self.assertFalse(f.extends_below)
        self.assertTrue(f.extends_above)

    def test_invalid_breakpoints(self):
        self.assertRaises(ValueError, CadlagPath, [])
        self.assertRaises(ValueError, CadlagPath, [(1, 0, 0), (0, 0, 0)])

    def test_immutable(self):
        self.assertRaises(AttributeError, setattr, self.step, 'extends_above', True)

    def test_equal_paths_hash_equal(self):
        self.assertEqual(hash(CadlagPath.continuous([(0, 0), (1, 1), (2, 2)])),
                         hash(CadlagPath.continuous([(0, 0), (2, 2)])))

    def test_initial_and_final_points(self):
        self.assertEqual(self.step.initial_point, GraphPoint(0, -1))
        self.assertEqual(self.step.final_point, GraphPoint(1, 1))


class TestGraphs(unittest.TestCase):

    """Test case for the graph functions."""

    def setUp(self):
        self.step = CadlagPath([(0, 0, 1)], False, True)

    def test_interpolated_graph_keeps_jump(self):
        polyline = interpolated_graph(self.step)

        self.assertEqual(polyline.vertices, (GraphPoint(0, 0), GraphPoint(1, 0)))
        self.assertEqual(list(polyline.segments()), [(GraphPoint(0, 0), GraphPoint(1, 0))])

    def test_closed_graph_drops_jump(self):
        self.assertEqual(list(closed_graph(self.step).segments()), [])

    def test_jump_range(self):
        self.assertEqual(jump_range(self.step, 0), (0, 1))
        self.assertRaises(DomainError, jump_range, self.step, -1)

    def test_on_graph(self):
        self.assertTrue(on_graph(self.step, GraphPoint(HALF, 0)))
        self.assertTrue(on_graph(self.step, GraphPoint(1, 5)))
        self.assertFalse(on_graph(self.step, GraphPoint(2, 0)))
        self.assertFalse(on_graph(self.step, GraphPoint(0, -1)))

    def test_graph_before_on_jump(self):
        self.assertTrue(graph_before(self.step, GraphPoint(0, 0), GraphPoint(HALF, 0)))
        self.assertFalse(graph_before(self.step, GraphPoint(1, 0), GraphPoint(HALF, 0)))

    def test_graph_before_off_graph(self):
        self.assertRaises(NotOnPath, graph_before, self.step, GraphPoint(2, 0), GraphPoint(1, 1))


class TestRestrict(unittest.TestCase):

    """Test case for restrict, restrict_span and truncate."""

    def setUp(self):
        self.step = CadlagPath([(-1, 0, 0), (0, 0, 1), (1, 1, 1)])
        self.line = CadlagPath.continuous([(-1, 0), (1, 2)], True, True)

    def test_restrict_inside_jump(self):
        f = restrict(self.step, GraphPoint(HALF, 0))

        self.assertEqual(f.breakpoints, (Breakpoint(0, HALF, 1), Breakpoint(1, 1, 1)))
        self.assertFalse(f.extends_below)

    def test_restrict_off_graph(self):
        self.assertRaises(NotOnPath, restrict, self.step, GraphPoint(5, 0))

    def test_restrict_span(self):
        f = restrict_span(self.line, GraphPoint(0, -1), GraphPoint(2, 1))
        self.assertEqual(f, CadlagPath.continuous([(-1, 0), (1, 2)]))

    def test_restrict_span_wrong_order(self):
        self.assertRaises(OrderViolation, restrict_span, self.line, GraphPoint(2, 1), GraphPoint(0, -1))

    def test_truncate(self):
        f = truncate(self.line, GraphPoint(1, 0))
        self.assertEqual(f, CadlagPath.continuous([(-1, 0), (0, 1)], True, False))

    def test_concat_restores_path(self):
        z = GraphPoint(1, 0)
        self.assertEqual(concat(truncate(self.line, z), restrict(self.line, z)), self.line)

    def test_concat_mismatch(self):
        backward = truncate(self.line, GraphPoint(1, 0))
        forward = constant_path(5, 0)

        self.assertRaises(GlueMismatch, concat, backward, forward)

    @given(cadlag_paths(), st.data())
    def test_restriction_is_extended_by_path(self, f, data):
        t = data.draw(st.sampled_from(f.times))
        z = GraphPoint(f.value_at(t, PLUS), t)

        self.assertTrue(extends(restrict(f, z), f))


class TestExtends(unittest.TestCase):

    """Test case for the extends function."""

    def test_restriction_extends(self):
        f = constant_path(0)
        g = constant_path(0, 1)

        self.assertTrue(extends(g, f))
        self.assertFalse(extends(f, g))

    def test_different_values(self):
        self.assertFalse(extends(constant_path(1, 0), constant_path(0)))

    def test_point_path_on_jump(self):
        step = CadlagPath([(0, 0, 1)], True, True)

        self.assertTrue(extends(CadlagPath([(0, 0, HALF)]), step))
        self.assertFalse(extends(CadlagPath([(0, HALF, 0)]), step))


class TestRotate(unittest.TestCase):

    """Test case for the rotate function."""

    def test_rotate_swaps_flags(self):
        f = rotate(constant_path(1, 0))

        self.assertTrue(f.extends_below)
        self.assertFalse(f.extends_above)
        self.assertEqual(f.final_point, GraphPoint(-1, 0))

    @given(cadlag_paths())
    def test_rotate_is_an_involution(self, f):
        self.assertEqual(rotate(rotate(f)), f)


class TestModulus(unittest.TestCase):

    """Test case for the modulus function."""

    def test_monotone_path(self):
        f = CadlagPath.continuous([(-1, 0), (1, 1)], True, True)
        self.assertEqual(modulus(f, 2, 1), 0)

    def test_spike(self):
        f = CadlagPath.continuous([(0, 0), (Fraction(1, 4), 1), (HALF, 0)], True, True)
        self.assertEqual(modulus(f, 2, 1), 1)

    def test_spike_wider_than_delta(self):
        f = CadlagPath.continuous([(-1, 0), (0, 1), (1, 0)], True, True)
        self.assertLess(modulus(f, 2, HALF), modulus(f, 2, 3))

    def test_invalid_arguments(self):
        f = constant_path(0)

        self.assertRaises(ParamError, modulus, f, 0, 1)
        self.assertRaises(ParamError, modulus, f, 1, 0)


def main():
    unittest.main()


if __name__ == '__main__':
    main()
