#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module responsible for parsing the options. """

from fractions import Fraction

from .paths import GraphPoint
from .weave import Window
from .order import is_ramified
from .errors import ParamError


GRID_SPECS = ('all', 'nonramified', 'starts')


class OptionHolder(object):

    """Simple data structure that holds informations for the given option.

    Args:
        name (string): Option name. Must be a valid option name
            from the optionsmanager.OptionsManager class.
            See optionsmanager.OptionsManager load_default() method.

        flag (string): The option command line switch.

        commands (tuple): The subcommands that accept the switch.

        convert (callable): Turns the command line string into the
            option value.

    """

    def __init__(self, name, flag, commands, convert=str):
        self.name = name
        self.flag = flag
        self.commands = commands
        self.convert = convert

    @property
    def dest(self):
        return self.flag.lstrip('-').replace('-', '_')

    def applies_to(self, command):
        """Returns True if the given subcommand accepts the option. """
        return command in self.commands


class OptionsParser(object):

    """Parse optionsmanager.OptionsManager options.

    This class is responsible for turning the weavekit settings into
    the defaults of the subcommand switches and for writing the resolved
    switches back to an explicit command line.

    """

    def __init__(self):
        self._options = [
            OptionHolder('metric', '--metric', ('dist',)),
            OptionHolder('refine_eps', '--refine', ('dist', 'sweep'), float),
            OptionHolder('hausdorff_tol', '--tol', ('dist',), float),
            OptionHolder('mu_samples', '--mu-samples', ('flow',), int),
            OptionHolder('workers_number', '--workers', ('sweep',), int),
            OptionHolder('seed', '--seed', ('sim', 'sweep', 'flow'), int),
            OptionHolder('window', '--window', ('sim', 'sweep')),
            OptionHolder('site_jitter', '--jitter', ('sweep', 'ramified'), float)
        ]

    def options_for(self, command):
        """Returns the OptionHolders of the given subcommand. """
        return [option for option in self._options if option.applies_to(command)]

    def add_arguments(self, subparser, command, options_dictionary):
        """Add the switches of the command with the settings as defaults. """
        for option in self.options_for(command):
            default = options_dictionary[option.name]
            subparser.add_argument(option.flag,
                                   type=option.convert,
                                   default=default,
                                   help='default: {0}'.format(default))

    def parse(self, command, namespace):
        """Parse the resolved switches of a parsed command line.

        Args:
            command (string): The subcommand.
            namespace (argparse.Namespace): The parsed arguments.

        Returns:
            List of strings with the command line switches and their
            values, so a recorded command does not depend on the
            settings file.

        """
        options_list = []

        for option in self.options_for(command):
            value = getattr(namespace, option.dest)

            options_list.append(option.flag)
            options_list.append(str(value))

        return options_list


def parse_number(text):
    """Parse an exact number, "0.25" and "1/4" give Fraction(1, 4). """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParamError('{0!r} is not a number'.format(text))


def parse_list(text):
    """Parse a comma separated list of exact numbers. """
    text = text.strip()

    if not text:
        return []

    return [parse_number(item) for item in text.split(',')]


def parse_window(text):
    """Parse a "T,X" window.

    Raises:
        ParamError unless T and X are positive numbers.

    """
    values = parse_list(text)

    if len(values) != 2:
        raise ParamError('window must be "T,X", got {0!r}'.format(text))

    if values[0] <= 0 or values[1] <= 0:
        raise ParamError('window sizes must be positive, got {0!r}'.format(text))

    return Window(*values)


def parse_points(text):
    """Parse "x,t;x,t;..." into a list of GraphPoints. """
    points = []

    for item in text.split(';'):
        if not item.strip():
            continue

        values = parse_list(item)

        if len(values) != 2:
            raise ParamError('point must be "x,t", got {0!r}'.format(item))

        points.append(GraphPoint(*values))

    return points


def starts(weave):
    """Return the initial points of the maximal paths that have one. """
    return sorted(set(f.initial_point for f in weave.maximal()
                      if not f.extends_below and weave.window.contains(f.initial_point)),
                  key=lambda z: (z.t, z.x))


def resolve_grid(text, weave):
    """Turn a grid description into a list of points of the weave.

    Args:
        text (string): 'all' for the grid of the weave, 'nonramified'
            for its non ramified points, 'starts' for the initial points
            of the maximal paths or explicit points "x,t;x,t".

    """
    if text == 'all':
        return list(weave.grid)

    if text == 'nonramified':
        return [z for z in weave.grid if not is_ramified(weave, z)]

    if text == 'starts':
        return starts(weave)

    return parse_points(text)
