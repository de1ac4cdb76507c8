from collections import defaultdict
import logging

import numpy as np

logger = logging.getLogger(__name__)


class RunLog(object):
    """In-memory storage of the quantities seen during one run, plus named counters."""

    def __init__(self, verbose=False):
        self.verbose = verbose
        self.storage = {}  # per-name value lists
        self.counters = defaultdict(int)

    def reset(self):
        self.storage = {}
        self.counters = defaultdict(int)

    def __getitem__(self, key):
        key = self.transform_name(key)
        return np.array(self.storage[key])

    def __iter__(self):
        for key in self.storage:
            yield key

    def __contains__(self, key):
        return self.transform_name(key) in self.storage

    def transform_name(self, name):
        return name.replace("/", "_")

    def _add_to_storage(self, storage, name, value):
        name = self.transform_name(name)
        try:
            storage[name].append(value)
        except KeyError:
            storage[name] = [value]

    def add(self, name, value):
        self._add_to_storage(self.storage, name, value)
        if self.verbose:
            logger.info("%s: %s", name, value)

    def count(self, name, amount=1):
        self.counters[self.transform_name(name)] += amount

    def get(self):
        return self.storage

    def summary(self):
        return dict(sorted(self.counters.items()))

    def ranges(self):
        """ {name: [min, max]} over every stored series """
        return {name: [int(self[name].min()), int(self[name].max())] for name in sorted(self.storage)}
