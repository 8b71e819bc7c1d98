# -*- coding: UTF-8 -*-

from .utils import TwoWayOrderedDict as tdict


METRICS = tdict([
    ('m1', "M1 (ordered, interpolated graph)"),
    ('m2', "M2 (Hausdorff, interpolated graph)"),
    ('j1', "J1 (ordered, closed graph)"),
    ('j2', "J2 (Hausdorff, closed graph)")
])

ORDERED_METRICS = ('m1', 'j1')

JUMP_METRICS = ('j1', 'j2')

CROSS_KINDS = tdict([
    ('none', "None"),
    ('left_to_right', "LeftToRight"),
    ('right_to_left', "RightToLeft"),
    ('both', "Both")
])

GENERATORS = tdict([
    ('coalesce', "Coalescing random walks"),
    ('branch', "Branching coalescing random walks"),
    ('constant', "Constant paths")
])

FIXTURES = tdict([
    ('fig1-left', "Fig1Left"),
    ('fig1-right', "Fig1Right"),
    ('fig3-left', "Fig3Left"),
    ('fig3-center', "Fig3Center"),
    ('fig3-right', "Fig3Right")
])

WEAVE_KINDS = tdict([
    ('forward', "Weave"),
    ('dual', "DualWeave")
])

REPORT_COLUMNS = ('level', 'mesh', 'ks', 'weave_ks', 'ramified_fraction', 'successive_distance')
