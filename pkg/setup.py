#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit setup file.

Examples:
    Install::

        python setup.py install

    Build source distribution::

        python setup.py sdist

    Build the command line script only::

        python setup.py build_bin

    Run the test suite::

        python -m unittest discover -s tests

Notes:
    The package metadata is read from the info.py and version.py
    modules without importing the package, so the numerical
    dependencies do not have to be installed before setup runs.

    Basic steps of the setup::

        * Read the package metadata
        * Build the weavekit script from __main__.py
        * Run setup

"""

from setuptools import setup, Command
from setuptools.command.build_py import build_py

import os
from shutil import copyfile

__packagename__ = "weavekit"


def read_metadata(*filenames):
    """Execute the given package modules and return their globals. """
    metadata = {}

    for filename in filenames:
        with open(os.path.join(__packagename__, filename)) as input_file:
            exec(input_file.read(), metadata)

    return metadata


METADATA = read_metadata("version.py", "info.py")


class BuildBin(Command):

    description = "build the weavekit script file"
    user_options = []

    def initialize_options(self):
        self.scripts_dir = None

    def finalize_options(self):
        self.scripts_dir = os.path.join("build", "_scripts")

    def run(self):
        if not os.path.exists(self.scripts_dir):
            os.makedirs(self.scripts_dir)

        copyfile(os.path.join(__packagename__, "__main__.py"),
                 os.path.join(self.scripts_dir, "weavekit"))


class Build(build_py):

    """Overwrite the default 'build_py' behaviour."""

    def run(self):
        self.run_command("build_bin")
        build_py.run(self)


# Overwrite cmds
cmdclass = {
    "build_py": Build,
    "build_bin": BuildBin
}


setup(
    author              = METADATA["__author__"],
    name                = __packagename__,
    version             = METADATA["__version__"],
    license             = METADATA["__license__"],
    description         = METADATA["__description__"],
    long_description    = METADATA["__descriptionfull__"],
    packages            = [__packagename__],
    cmdclass            = cmdclass,
    python_requires     = ">=3.6",
    install_requires    = [
        "twodict<1.1",
        "numpy>=1.17",
        "scipy",
        "matplotlib"
    ],
    tests_require       = [
        "mock",
        "hypothesis"
    ],
    extras_require      = {
        "test": ["mock", "hypothesis"]
    },
    entry_points        = {
        "console_scripts": ["weavekit = weavekit:main"]
    }
)
