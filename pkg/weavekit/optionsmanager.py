#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module to handle settings. """

import os
import json

from .utils import (
    os_path_exists,
    check_path
)

from .formats import METRICS


class OptionsManager(object):

    """Handles weavekit options.

    This class is responsible for storing and retrieving the options.

    Attributes:
        SETTINGS_FILENAME (string): Filename of the settings file.

    Args:
        config_path (string): Absolute path where OptionsManager
            should store the settings file.

    Note:
        See load_default() method for available options.

    Example:
        Access the options using the 'options' variable.

        opt_manager = OptionsManager('.')
        opt_manager.options['metric'] = 'j1'

    """

    SETTINGS_FILENAME = 'settings.json'

    def __init__(self, config_path):
        self.config_path = config_path
        self.settings_file = os.path.join(config_path, self.SETTINGS_FILENAME)
        self.options = dict()
        self.load_default()
        self.load_from_file()

    def load_default(self):
        """Load the default options.

        Note:
            This method is automatically called by the constructor.

        Options Description:

            refine_eps (float): Refinement resolution of the compactified
                polylines used by the M1 and J1 distances.

            metric (string): Default metric of the 'dist' command.
                See formats.METRICS for available values.

            mu_samples (int): Number of uniform window samples used by
                the phi embedding.

            workers_number (int): Number of trial workers. The
                WEAVEKIT_THREADS environment variable overrides it.

            enable_log (boolean): If True weavekit will log every command.

            log_time (boolean): If True weavekit will add the time in
                front of every log entry.

            seed (int): Default seed of the 'sim' and 'sweep' commands.

            window (string): Default window "T,X".

            hausdorff_tol (float): Absolute tolerance of the branch and
                bound Hausdorff kernel used by M2 and J2.

            site_jitter (float): Fraction of the mesh by which sample
                grids are moved off the lattice.

        """
        self.options = {
            'refine_eps': 1e-3,
            'metric': 'm1',
            'mu_samples': 100000,
            'workers_number': 4,
            'enable_log': True,
            'log_time': True,
            'seed': 0,
            'window': '1,1',
            'hausdorff_tol': 1e-12,
            'site_jitter': 0.37
        }

    def load_from_file(self):
        """Load options from settings file. """
        if not os_path_exists(self.settings_file):
            return

        with open(self.settings_file, 'r') as settings_file:
            try:
                options = json.load(settings_file)

                if self._settings_are_valid(options):
                    self.options = options
            except ValueError:
                self.load_default()

    def save_to_file(self):
        """Save options to settings file. """
        check_path(self.config_path)

        with open(self.settings_file, 'w') as settings_file:
            json.dump(self.options,
                      settings_file,
                      indent=4,
                      separators=(',', ': '))

    def _settings_are_valid(self, settings_dictionary):
        """Check settings.json dictionary.

        Args:
            settings_dictionary (dict): Options dictionary loaded
                from the settings file. See load_from_file() method.

        Returns:
            True if settings.json dictionary is valid, else False.

        """
        if not isinstance(settings_dictionary, dict):
            return False

        for key in self.options:
            if key not in settings_dictionary:
                return False

            if type(self.options[key]) != type(settings_dictionary[key]):
                return False

        # Check if each key has a valid value
        rules_dict = {
            'metric': METRICS.keys(),
            'enable_log': (True, False),
            'log_time': (True, False)
        }

        for key, valid_list in rules_dict.items():
            if settings_dictionary[key] not in valid_list:
                return False

        for key in ('refine_eps', 'mu_samples', 'workers_number', 'hausdorff_tol'):
            if settings_dictionary[key] <= 0:
                return False

        if not 0 < settings_dictionary['site_jitter'] < 1:
            return False

        if settings_dictionary['seed'] < 0:
            return False

        if len(settings_dictionary['window'].split(',')) != 2:
            return False

        return True
