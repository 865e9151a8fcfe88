# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Configuration for Random-Circle-Maps.

Every section below can be overridden from an experiment file: the JSON key
is the section name in lower case without the prefix (``family``,
``base``, ...) and its entries are merged over the defaults.
"""

from .system import GOLDEN_MEAN_ANGLE

CIRCLE_MAPS_FAMILY = {
    "name": "sine",
    "k": 2,
    "a": 0.02,
    "epsilon": 0.01,
    "delta0": 0.2,
    "eta": 0.06,
    "b": [-0.1, 0.1],
    "omega_samples": 256,
    "x_samples": 4096,
}
"""Map family and hypothesis constants.

``name`` selects a family registered in the
``random_circle_maps.families`` entry point group; the remaining keys that
are not hypothesis constants are passed to the family class."""

CIRCLE_MAPS_BASE = {
    "alpha": GOLDEN_MEAN_ANGLE,
    "omega0": 0.0,
}
"""Rotation angle of the noise base and the working noise value."""

CIRCLE_MAPS_SOLVER = {
    "tolerance": 1e-12,
    "max_bisections": 200,
    "newton_steps": 5,
}
"""Inverse branch solver."""

CIRCLE_MAPS_CONJUGACY = {
    "level": 12,
    "p_depth": None,
    "max_points": 2**20,
    "residual_samples": 4096,
}
"""Conjugacy grids. ``p_depth`` of ``None`` uses the a priori depth for a
``1e-10`` accurate random fixed point."""

CIRCLE_MAPS_CODING = {
    "depth": 40,
    "word_length": 10,
    "point": 0.3,
    "chunk": 1024,
}
"""Symbolic coding: decode depth, default word length and point to encode."""

CIRCLE_MAPS_HISTORIC = {
    "rule": "harmonic",
    "blocks": 4,
    "budget": 10**7,
    "q_omega": 64,
    "q_x": 4096,
    "level": 10,
    "slack": 1e-3,
    "bins": 100,
    "past_points": 20000,
    "witnesses": 10,
    "alpha_fraction": 1.0 / 3.0,
    "beta_fraction": 2.0 / 3.0,
    "batch_size": 2**18,
}
"""Historic construction: tolerance rule, block count, iteration budget,
quadrature sizes for ``I*``, checkpoint slack, density histogram and
witness search."""

CIRCLE_MAPS_SEEDS = {
    "point": 20260101,
    "sampling": 7,
}
"""Seeds of the random point coded by ``s''`` and of the sampling of
``omega`` values."""

CIRCLE_MAPS_OUTPUT = {
    "directory": "results",
}
"""Directory receiving CSV tables, JSON summaries and the manifest."""

CIRCLE_MAPS_WORKERS = 1
"""Worker threads for Birkhoff sums."""

CIRCLE_MAPS_CACHE_ENABLED = True
"""Use the on-disk result cache."""

CIRCLE_MAPS_CACHE_DIR = None
"""Cache directory; ``None`` puts it in ``<output>/.cache``."""

CIRCLE_MAPS_FAMILIES_ENTRY_POINT_GROUP = "random_circle_maps.families"
"""Entry point group map families are loaded from."""

SECTIONS = ("family", "base", "solver", "conjugacy", "coding", "historic", "seeds", "output")
"""Sections of an experiment file."""
