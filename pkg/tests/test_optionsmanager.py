#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Contains test cases for the optionsmanager.py module."""

import sys
import json
import shutil
import os.path
import tempfile
import unittest

PATH = os.path.realpath(os.path.abspath(__file__))
sys.path.insert(0, os.path.dirname(os.path.dirname(PATH)))

try:
    from weavekit.optionsmanager import OptionsManager
except ImportError as error:
    print(error)
    sys.exit(1)


class TestOptionsManager(unittest.TestCase):

    """Test case for the OptionsManager class."""

    def setUp(self):
        self.config_path = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.config_path)

    def write_settings(self, options):
        with open(os.path.join(self.config_path, OptionsManager.SETTINGS_FILENAME), 'w') as settings_file:
            settings_file.write(options if isinstance(options, str) else json.dumps(options))

    def test_defaults(self):
        opt_manager = OptionsManager(self.config_path)

        self.assertEqual(opt_manager.options['metric'], 'm1')
        self.assertEqual(opt_manager.options['window'], '1,1')
        self.assertEqual(opt_manager.options['seed'], 0)

    def test_save_and_load(self):
        opt_manager = OptionsManager(self.config_path)
        opt_manager.options['metric'] = 'j2'
        opt_manager.options['seed'] = 17
        opt_manager.save_to_file()

        reloaded = OptionsManager(self.config_path)

        self.assertEqual(reloaded.options['metric'], 'j2')
        self.assertEqual(reloaded.options['seed'], 17)

    def test_save_creates_config_path(self):
        config_path = os.path.join(self.config_path, 'nested')

        OptionsManager(config_path).save_to_file()
        self.assertTrue(os.path.exists(os.path.join(config_path, OptionsManager.SETTINGS_FILENAME)))

    def test_invalid_json(self):
        self.write_settings('{not json')
        self.assertEqual(OptionsManager(self.config_path).options['metric'], 'm1')

    def test_unknown_metric(self):
        options = OptionsManager(self.config_path).options
        options['metric'] = 'sup'
        self.write_settings(options)

        self.assertEqual(OptionsManager(self.config_path).options['metric'], 'm1')

    def test_missing_key(self):
        options = OptionsManager(self.config_path).options
        options['seed'] = 5
        del options['window']
        self.write_settings(options)

        self.assertEqual(OptionsManager(self.config_path).options['seed'], 0)

    def test_wrong_type(self):
        options = OptionsManager(self.config_path).options
        options['workers_number'] = '8'
        self.write_settings(options)

        self.assertEqual(OptionsManager(self.config_path).options['workers_number'], 4)

    def test_out_of_range(self):
        for key, value in (('refine_eps', -1.0), ('site_jitter', 1.5), ('seed', -2), ('window', '1')):
            options = OptionsManager(self.config_path).options
            options[key] = value
            self.write_settings(options)

            self.assertNotEqual(OptionsManager(self.config_path).options[key], value, key)


def main():
    unittest.main()


if __name__ == '__main__':
    main()
