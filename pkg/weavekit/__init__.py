#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit __init__ file.

Responsible on how the package looks from the outside.

Example:
    In order to run a command from a python script.

        import weavekit

        weavekit.main(['fixture', 'fig3-left', '-o', 'fig3-left.json'])

"""

import sys

__packagename__ = "weavekit"

# For package use
from .version import __version__
from .info import (
    __author__,
    __appname__,
    __contact__,
    __license__,
    __projecturl__,
    __licensefull__,
    __description__,
    __descriptionfull__,
)

from .logmanager import LogManager
from .optionsmanager import OptionsManager

from .utils import get_config_path

from .paths import (
    CadlagPath,
    GraphPoint
)

from .weave import (
    Window,
    Weave,
    DualWeave,
    validate,
    web_op,
    flow_op,
    dual_web,
    reconstruct_flow
)

from .errors import WeaveError


# Set config path and create options and log managers
config_path = get_config_path()

opt_manager = OptionsManager(config_path)
log_manager = None

if opt_manager.options['enable_log']:
    try:
        log_manager = LogManager(config_path, opt_manager.options['log_time'])
    except (IOError, OSError):
        log_manager = None


def main(argv=None):
    """The real main. Runs the command line and exits with its code. """
    from .cli import run

    if argv is None:
        argv = sys.argv[1:]

    sys.exit(run(argv, opt_manager, log_manager))
