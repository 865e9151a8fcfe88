# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Result cache tests."""

import numpy as np

from random_circle_maps.cache import DiskCache, cache_key


def test_cache_key():
    """Keys depend on every part and on nothing else."""
    key = cache_key("grid", 0.25, 12)
    assert key == cache_key("grid", 0.25, 12)
    assert key != cache_key("grid", 0.25, 13)
    assert len(key) == 64


def test_array(tmp_path):
    """Arrays are computed once and then read back."""
    cache = DiskCache(tmp_path)
    calls = []

    def compute():
        calls.append(1)
        return np.linspace(0.0, 1.0, 5)

    key = cache_key("array")
    first = cache.array(key, compute)
    second = cache.array(key, compute)
    assert calls == [1]
    assert np.array_equal(first, second)
    assert (tmp_path / key[:2] / f"{key}.npy").exists()
    assert not list(tmp_path.rglob("*.tmp"))


def test_document(tmp_path):
    """Documents survive a fresh cache instance."""
    key = cache_key("doc")
    DiskCache(tmp_path).document(key, lambda: {"value": 0.5, "rows": [1, 2]})
    assert DiskCache(tmp_path).get_json(key) == {"value": 0.5, "rows": [1, 2]}


def test_disabled(tmp_path):
    """A disabled cache recomputes and writes nothing."""
    cache = DiskCache(tmp_path / "cache", enabled=False)
    calls = []

    def compute():
        calls.append(1)
        return {"n": len(calls)}

    assert cache.document("k", compute) == {"n": 1}
    assert cache.document("k", compute) == {"n": 2}
    assert not (tmp_path / "cache").exists()
