# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Content-addressed result cache on disk.

Entries are pure function results keyed by a SHA-256 of their inputs, so
deleting any of them is always safe. Writes go through a temporary file in
the same directory and :func:`os.replace`; concurrent writers of the same
key produce identical bytes and the last one wins.
"""

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)


def cache_key(*parts):
    """SHA-256 of the canonical JSON of ``parts``."""
    payload = json.dumps(parts, sort_keys=True, separators=(",", ":"), default=repr)
    return hashlib.sha256(payload.encode()).hexdigest()


class DiskCache:
    """Arrays as ``.npy`` and documents as ``.json`` under ``directory``."""

    def __init__(self, directory, enabled=True):
        """Constructor.

        :param directory: cache root, created on first write.
        :param enabled: a disabled cache neither reads nor writes.
        """
        self.directory = Path(directory)
        self.enabled = enabled

    def _path(self, key, suffix):
        return self.directory / key[:2] / f"{key}{suffix}"

    def _write(self, path, write):
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=path.suffix + ".tmp")
        try:
            with os.fdopen(fd, "wb") as fp:
                write(fp)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_array(self, key):
        """Cached array or ``None``."""
        path = self._path(key, ".npy")
        if not self.enabled or not path.exists():
            return None
        logger.debug("cache hit %s", key[:12])
        return np.load(path, allow_pickle=False)

    def put_array(self, key, array):
        """Store an array."""
        if self.enabled:
            self._write(
                self._path(key, ".npy"),
                lambda fp: np.save(fp, np.asarray(array), allow_pickle=False),
            )

    def get_json(self, key):
        """Cached document or ``None``."""
        path = self._path(key, ".json")
        if not self.enabled or not path.exists():
            return None
        logger.debug("cache hit %s", key[:12])
        with open(path, encoding="utf-8") as fp:
            return json.load(fp)

    def put_json(self, key, document):
        """Store a JSON document."""
        if self.enabled:
            payload = json.dumps(document, sort_keys=True).encode("utf-8")
            self._write(self._path(key, ".json"), lambda fp: fp.write(payload))

    def array(self, key, compute):
        """Cached array for ``key``, computing and storing it on a miss."""
        value = self.get_array(key)
        if value is None:
            value = np.asarray(compute())
            self.put_array(key, value)
        return value

    def document(self, key, compute):
        """Cached JSON document for ``key``, computing and storing it on a miss."""
        value = self.get_json(key)
        if value is None:
            value = compute()
            self.put_json(key, value)
        return value
