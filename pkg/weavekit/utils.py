#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module that contains util functions.

Attributes:
    THREADS_ENV (string): Environment variable that caps the number of
        worker threads.

    SLOW_TESTS_ENV (string): Environment variable that enables the
        acceptance scale tests.

"""

import os
import sys
import hashlib

from fractions import Fraction

try:
    from twodict import TwoWayOrderedDict
except ImportError as error:
    print(error)
    sys.exit(1)

from .info import __appname__


THREADS_ENV = 'WEAVEKIT_THREADS'

SLOW_TESTS_ENV = 'WEAVEKIT_SLOW_TESTS'


os_path_exists = os.path.exists
os_path_expanduser = os.path.expanduser
os_makedirs = os.makedirs
os_getenv = os.getenv


def check_path(path):
    """Create path if not exist. """
    if not os_path_exists(path):
        os_makedirs(path)


def get_config_path():
    """Return user config path.

    Note:
        Windows = %AppData% + app_name
        Linux   = ~/.config + app_name

    """
    if os.name == 'nt':
        path = os_getenv('APPDATA')
    else:
        path = os.path.join(os_path_expanduser('~'), '.config')

    return os.path.join(path, __appname__.lower())


def get_threads(default):
    """Return the number of worker threads.

    The WEAVEKIT_THREADS environment variable overrides the given
    default when it holds a positive integer.

    """
    value = os_getenv(THREADS_ENV)

    if value is not None:
        try:
            threads = int(value)
        except ValueError:
            threads = 0

        if threads > 0:
            return threads

    return max(1, int(default))


def to_number(value):
    """Convert a JSON scalar to a weavekit number.

    Integers and strings become exact fractions ("0.0625", "1/3"),
    floats stay floats.

    Raises:
        ValueError if the value is not a number.

    """
    if isinstance(value, bool):
        raise ValueError('boolean is not a number')

    if isinstance(value, (int, Fraction)):
        return Fraction(value)

    if isinstance(value, float):
        return value

    if isinstance(value, str):
        return Fraction(value.strip())

    raise ValueError('{0!r} is not a number'.format(value))


def to_exact(value):
    """Return value as a Fraction, floats through their shortest repr.

    Example:
        to_exact(0.1) == Fraction(1, 10)

    """
    if isinstance(value, float):
        return Fraction(repr(value))

    return Fraction(value)


def _decimal_digits(denominator):
    """Return the number of decimal digits of 1/denominator or None
    if the expansion does not terminate. """
    twos = fives = 0

    while denominator % 2 == 0:
        denominator //= 2
        twos += 1

    while denominator % 5 == 0:
        denominator //= 5
        fives += 1

    if denominator != 1:
        return None

    return max(twos, fives)


def encode_number(value):
    """Encode a number for the JSON documents.

    Fractions become exact decimal strings when their expansion
    terminates and "p/q" strings otherwise. Floats are kept as floats,
    which json writes with round trip precision.

    """
    if isinstance(value, bool):
        raise ValueError('boolean is not a number')

    if isinstance(value, int):
        return str(value)

    if not isinstance(value, Fraction):
        return float(value)

    if value.denominator == 1:
        return str(value.numerator)

    digits = _decimal_digits(value.denominator)

    if digits is None:
        return '{0}/{1}'.format(value.numerator, value.denominator)

    sign = '-' if value < 0 else ''
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    whole, frac = divmod(scaled, 10 ** digits)

    return '{0}{1}.{2}'.format(sign, whole, str(frac).zfill(digits).rstrip('0'))


def sha256_digest(data):
    """Return the hex sha256 digest of the given bytes. """
    return hashlib.sha256(data).hexdigest()

