#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for the run log.

Every line of the log belongs to one process run and starts with the
run id, so the lines of concurrent or repeated runs can be told apart.
A finished command is logged as one summary line built from its run
manifest, a failed command as one error line. Trial failures of the
Monte Carlo workers are logged as plain lines.

"""

import os
import os.path
from time import strftime

from .utils import (
    os_path_exists,
    check_path
)


class LogManager(object):

    """Run log of weavekit.

    Attributes:
        LOG_FILENAME (string): Filename of the log file.
        OLD_SUFFIX (string): Suffix of the rotated log file.
        TIME_TEMPLATE (string): Template of a line with a time stamp.
        DIGEST_CHARS (int): Number of digest characters in summaries.
        MAX_LOGSIZE (int): Size(Bytes) above which the log is rotated.

    Args:
        config_path (string): Absolute path where LogManager should
            store the log file.

        add_time (boolean): If True LogManager will also log the time.

        run_id (string): Prefix of every line of this run. Defaults to
            the start time and the process id.

    """

    LOG_FILENAME = "log"
    OLD_SUFFIX = ".1"
    TIME_TEMPLATE = "[{time}] {line}"
    DIGEST_CHARS = 12
    MAX_LOGSIZE = 524288  # Bytes

    def __init__(self, config_path, add_time=False, run_id=None):
        self.config_path = config_path
        self.add_time = add_time
        self.run_id = run_id or '{0}-{1}'.format(strftime('%Y%m%dT%H%M%S'), os.getpid())
        self.log_file = os.path.join(config_path, self.LOG_FILENAME)
        self._rotate()

    def log_size(self):
        """Return log file size in Bytes. """
        if not os_path_exists(self.log_file):
            return 0

        return os.path.getsize(self.log_file)

    def clear(self):
        """Clear log file. """
        check_path(self.config_path)

        with open(self.log_file, 'w', encoding='utf-8'):
            pass

    def log(self, data):
        """Log a line of this run.

        Args:
            data (string): Message without the run id. Other types are
                ignored.

        """
        if isinstance(data, str):
            self._write('{0} {1}'.format(self.run_id, data))

    def log_run(self, manifest, target, returncode):
        """Log the summary of a finished command.

        Args:
            manifest (codec.RunManifest): Manifest of the command.
            target (string): Where the manifest was written.
            returncode (int): Exit code of the command.

        """
        outputs = ','.join('{0}:{1}'.format(name, digest[:self.DIGEST_CHARS])
                           for name, digest in sorted(manifest.outputs.items()))

        fields = [
            ('exit', returncode),
            ('command', ' '.join(manifest.command)),
            ('seed', manifest.seed),
            ('inputs', len(manifest.inputs)),
            ('outputs', outputs or '-'),
            ('wall', '{0:.3f}s'.format(manifest.wall_time)),
            ('manifest', target)
        ]

        self.log(' '.join('{0}={1}'.format(key, value) for key, value in fields))

    def log_error(self, argv, error):
        """Log the error that stopped a command. """
        self.log('exit={0} command={1} error={2}: {3}'.format(
            error.returncode, ' '.join(argv), type(error).__name__, error))

    def _write(self, line):
        check_path(self.config_path)

        if self.add_time:
            line = self.TIME_TEMPLATE.format(time=strftime('%c'), line=line)

        with open(self.log_file, 'a', encoding='utf-8', errors='ignore') as log:
            log.write(line + '\n')

    def _rotate(self):
        """Move an oversized log aside and start a fresh one. """
        if self.log_size() > self.MAX_LOGSIZE:
            os.replace(self.log_file, self.log_file + self.OLD_SUFFIX)

        if not os_path_exists(self.log_file):
            self.clear()
