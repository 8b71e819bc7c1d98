#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Weavekit module for running Monte Carlo trials in a thread pool.

Every trial is a pure function of its seed. The TrialManager hands the
queued items of a TrialList to idle Workers and the results are read
back in seed order, so the merged output does not depend on the
scheduling.

Note:
    The trial functions do the numerical work, numpy releases the GIL
    inside its kernels.

"""

import time

from threading import (
    Thread,
    RLock,
    Lock
)

from .utils import get_threads
from .errors import TrialError


_SYNC_LOCK = RLock()

# Decorator that adds thread synchronization to a function
def synchronized(lock):
    def _decorator(func):
        def _wrapper(*args, **kwargs):
            with lock:
                return func(*args, **kwargs)
        return _wrapper
    return _decorator


class TrialItem(object):

    """Object that represents a single trial.

    Attributes:
        STAGES (tuple): Stages of the trial item.

    Args:
        seed (int): Seed of the trial. It also identifies the item.

        params (tuple): Extra positional arguments of the trial function.

    """

    STAGES = ("Queued", "Active", "Completed", "Error")

    def __init__(self, seed, params=()):
        self.seed = seed
        self.params = tuple(params)
        self.object_id = seed

        self._stage = self.STAGES[0]
        self.result = None
        self.error = None

    @property
    def stage(self):
        return self._stage

    @stage.setter
    def stage(self, value):
        if value not in self.STAGES:
            raise ValueError(value)

        self._stage = value

    def __eq__(self, other):
        return self.object_id == other.object_id

    def __hash__(self):
        return hash(self.object_id)


class TrialList(object):

    """List like data structure that contains TrialItems.

    Args:
        items (list): List that contains TrialItems.

    """

    def __init__(self, items=None):
        assert isinstance(items, list) or items is None

        if items is None:
            self._items_dict = {}
            self._items_list = []
        else:
            self._items_list = [item.object_id for item in items]
            self._items_dict = {item.object_id: item for item in items}

    @synchronized(_SYNC_LOCK)
    def insert(self, item):
        """Inserts the given item to the list. Does not check for duplicates. """
        self._items_list.append(item.object_id)
        self._items_dict[item.object_id] = item

    @synchronized(_SYNC_LOCK)
    def fetch_next(self):
        """Returns the next queued item on the list.

        Returns:
            Next queued item or None if no other item exist.

        """
        for object_id in self._items_list:
            cur_item = self._items_dict[object_id]

            if cur_item.stage == "Queued":
                return cur_item

        return None

    @synchronized(_SYNC_LOCK)
    def get_item(self, object_id):
        """Returns the TrialItem with the given object_id."""
        return self._items_dict[object_id]

    @synchronized(_SYNC_LOCK)
    def get_items(self):
        """Returns a list with all the items."""
        return [self._items_dict[object_id] for object_id in self._items_list]

    @synchronized(_SYNC_LOCK)
    def change_stage(self, object_id, new_stage):
        """Change the stage of the item with the given object_id."""
        self._items_dict[object_id].stage = new_stage

    @synchronized(_SYNC_LOCK)
    def index(self, object_id):
        """Get the zero based index of the item with the given object_id."""
        if object_id in self._items_list:
            return self._items_list.index(object_id)
        return -1

    @synchronized(_SYNC_LOCK)
    def results(self):
        """Returns the results of the completed items sorted by seed. """
        items = sorted(self._items_dict.values(), key=lambda item: item.seed)
        return [item.result for item in items if item.stage == "Completed"]

    @synchronized(_SYNC_LOCK)
    def failures(self):
        """Returns (seed, error) pairs of the failed items sorted by seed. """
        items = sorted(self._items_dict.values(), key=lambda item: item.seed)
        return [(item.seed, item.error) for item in items if item.stage == "Error"]

    @synchronized(_SYNC_LOCK)
    def __len__(self):
        return len(self._items_list)


class TrialManager(Thread):

    """Runs the trials of a TrialList.

    Attributes:
        WAIT_TIME (float): Time in seconds to sleep.

    Args:
        trial_list (TrialList): List that contains the items to run.

        function (callable): Trial function, called as
            function(seed, *params).

        workers_number (int): Size of the worker pool. The
            WEAVEKIT_THREADS environment variable overrides it.

        log_manager (logmanager.LogManager): Object responsible for writing
            errors to the log.

    """

    WAIT_TIME = 0.01

    def __init__(self, trial_list, function, workers_number=1, log_manager=None):
        super(TrialManager, self).__init__()
        self.trial_list = trial_list
        self.function = function
        self.log_manager = log_manager

        self._time_it_took = 0
        self._successful = 0

        log_lock = None if log_manager is None else Lock()
        wparams = (trial_list, function, log_manager, log_lock)
        self._workers = [Worker(*wparams) for _ in range(get_threads(workers_number))]

        self.start()

    @property
    def successful(self):
        """Returns number of successful trials. """
        return self._successful

    @property
    def time_it_took(self):
        """Returns time(seconds) it took for the trials to complete. """
        return self._time_it_took

    def run(self):
        self._time_it_took = time.time()

        while True:
            item = self.trial_list.fetch_next()

            if item is not None:
                worker = self._get_worker()

                if worker is not None:
                    self.trial_list.change_stage(item.object_id, "Active")
                    worker.run_trial(item)
                    continue

            if item is None and self._jobs_done():
                break

            time.sleep(self.WAIT_TIME)

        for worker in self._workers:
            worker.close()

        for worker in self._workers:
            worker.join()
            self._successful += worker.successful

        self._time_it_took = time.time() - self._time_it_took

    def _get_worker(self):
        for worker in self._workers:
            if worker.available():
                return worker

        return None

    def _jobs_done(self):
        """Returns True if the workers have finished their jobs else False. """
        for worker in self._workers:
            if not worker.available():
                return False

        return True


class Worker(Thread):

    """Simple worker which runs one trial at a time.

    Attributes:
        WAIT_TIME (float): Time in seconds to sleep.

    Args:
        trial_list (TrialList): Check TrialManager description.

        function (callable): Check TrialManager description.

        log_manager (logmanager.LogManager): Check TrialManager
            description.

        log_lock (threading.Lock): Synchronization lock for the log_manager.
            If the log_manager is set (not None) then the caller has to make
            sure that the log_lock is also set.

    """

    WAIT_TIME = 0.01

    def __init__(self, trial_list, function, log_manager=None, log_lock=None):
        super(Worker, self).__init__()
        self.trial_list = trial_list
        self.function = function
        self.log_manager = log_manager
        self.log_lock = log_lock

        self._successful = 0
        self._running = True
        self._item = None

        self.start()

    def run(self):
        while self._running:
            item = self._item

            if item is not None:
                try:
                    item.result = self.function(item.seed, *item.params)
                except Exception as error:
                    item.error = error
                    self.trial_list.change_stage(item.object_id, "Error")
                    self._log_data('trial {0} failed: {1}'.format(item.seed, error))
                else:
                    self.trial_list.change_stage(item.object_id, "Completed")
                    self._successful += 1

                self._item = None
                continue

            time.sleep(self.WAIT_TIME)

    def run_trial(self, item):
        """Run the given TrialItem. """
        self._item = item

    def close(self):
        """Kill the worker after the current trial. """
        self._running = False

    def available(self):
        """Return True if the worker has no job else False. """
        return self._item is None

    @property
    def successful(self):
        """Return the number of successful trials for current worker. """
        return self._successful

    def _log_data(self, data):
        """Write the given data in a synchronized way to the log file. """
        if self.log_manager is not None:
            self.log_lock.acquire()
            self.log_manager.log(data)
            self.log_lock.release()


def run_trials(function, seeds, params=(), workers_number=1, log_manager=None, strict=True):
    """Run function(seed, *params) for every seed and return the results.

    Args:
        strict (boolean): Raise when a trial fails. Otherwise the failed
            trials are left out of the results.

    Returns:
        List of the results of the successful trials in seed order.

    Raises:
        TrialError if strict and a trial raised.

    """
    trial_list = TrialList([TrialItem(seed, params) for seed in seeds])

    manager = TrialManager(trial_list, function, workers_number, log_manager)
    manager.join()

    failures = trial_list.failures()

    if strict and failures:
        raise TrialError(failures)

    return trial_list.results()
