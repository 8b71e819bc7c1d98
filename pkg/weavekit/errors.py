#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module that holds the exception hierarchy.

Every error carries a return code. The command line front end exits
with the return code of the error that stopped it.

Attributes:
    OK, INVARIANT, SCHEMA (int): Integers that describe the exit status
        of a command.

"""

OK = 0
INVARIANT = 2
SCHEMA = 3


class WeaveError(Exception):

    """Base class of all the weavekit errors.

    Attributes:
        returncode (int): Exit status the command line should use.

    """

    returncode = INVARIANT


class DomainError(WeaveError):
    """A split time lies outside the domain of a path. """


class NotOnPath(WeaveError):
    """A space-time point does not lie on the interpolated graph. """


class OrderViolation(WeaveError):
    """Two graph points are given in the wrong graph order. """


class GlueMismatch(WeaveError):
    """Two path fragments do not meet at a common point. """


class CrossingAtSeam(WeaveError):
    """Two glued path fragments cross each other. """


class ParamError(WeaveError):
    """A numeric parameter is out of range. """


class EmptySet(WeaveError):
    """A set that must be non empty is empty. """


class RamifiedSeed(WeaveError):

    """Seed points are ramified in the weave.

    Args:
        points (list): The offending points.
        index (int): Position of the first offending point in the
            caller's seed list, or None.

    """

    def __init__(self, points, index=None):
        self.points = list(points)
        self.index = index
        message = 'ramified seed points: {0}'.format(self.points)
        if index is not None:
            message = 'seed #{0} is ramified: {1}'.format(index, self.points)
        super(RamifiedSeed, self).__init__(message)


class CrossesWeave(WeaveError):

    """A path crosses a path of the weave.

    Args:
        witness (tuple): (path, weave path, cross kind).

    """

    def __init__(self, witness):
        self.witness = witness
        super(CrossesWeave, self).__init__('path crosses the weave ({0})'.format(witness[2]))


class InvariantError(WeaveError):

    """A loaded weave violates the weave invariants.

    Args:
        witnesses (list): Crossing pairs and uncovered grid points.

    """

    def __init__(self, witnesses):
        self.witnesses = list(witnesses)
        super(InvariantError, self).__init__('weave invariant violated: {0}'.format(self.witnesses[:5]))


class SchemaError(WeaveError):

    """A document does not follow the weave JSON schema.

    Args:
        where (string): JSON path of the offending element.
        reason (string): What is wrong with it.

    """

    returncode = SCHEMA

    def __init__(self, where, reason):
        self.where = where
        self.reason = reason
        super(SchemaError, self).__init__('{0}: {1}'.format(where, reason))


class TrialError(WeaveError):

    """Monte Carlo trials did not all complete.

    Args:
        failures (list): (seed, error) pairs of the failed trials.
        message (string): Overrides the default message.

    """

    def __init__(self, failures, message=None):
        self.failures = list(failures)

        if message is None:
            message = '{0} trial(s) failed, first: {1}'.format(
                len(self.failures), self.failures[0] if self.failures else None)

        super(TrialError, self).__init__(message)
