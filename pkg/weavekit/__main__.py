#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit __main__ file.

__main__ file is a python 'executable' file which calls the weavekit
main() function in order to run a command. It can be used from the
package directory OR from a different directory after you have
installed the weavekit package.

Example:
    In order to run from the package directory.

        $ cd <package directory>
        $ python __main__.py validate weave.json

    In order to run from /usr/local/bin etc.. AFTER
    you have installed the package using setup.py.

        $ weavekit validate weave.json

"""

import sys

if __package__ is None and not hasattr(sys, "frozen"):
    # direct call of __main__.py
    import os.path
    PATH = os.path.realpath(os.path.abspath(__file__))
    sys.path.append(os.path.dirname(os.path.dirname(PATH)))

import weavekit


if __name__ == '__main__':
    weavekit.main()
