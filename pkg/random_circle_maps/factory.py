# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Application factory."""

import copy
import json

from flask import Flask

from . import config
from .errors import InvalidConfig
from .ext import RandomCircleMaps


def read_experiment_file(path):
    """Sections of a JSON experiment file, keyed by ``CIRCLE_MAPS_*`` name.

    :raises OSError: when the file cannot be read.
    :raises InvalidConfig: when it is not a JSON object of known sections.
    """
    with open(path, encoding="utf-8") as fp:
        try:
            data = json.load(fp)
        except json.JSONDecodeError as e:
            raise InvalidConfig({"_file": [f"{path}: {e}"]}) from e
    if not isinstance(data, dict):
        raise InvalidConfig({"_file": [f"{path}: expected a JSON object"]})
    unknown = sorted(set(data) - set(config.SECTIONS) - {"workers", "cache_enabled", "cache_dir"})
    if unknown:
        raise InvalidConfig({name: ["unknown section"] for name in unknown})
    return {f"CIRCLE_MAPS_{name.upper()}": value for name, value in data.items()}


def merge_config(app, values):
    """Merge ``values`` into ``app.config``; dict sections are merged key by key."""
    for key, value in values.items():
        current = app.config.get(key)
        if isinstance(current, dict) and isinstance(value, dict):
            merged = copy.deepcopy(current)
            merged.update(value)
            app.config[key] = merged
        else:
            app.config[key] = value


def create_app(config_path=None, **overrides):
    """Flask application carrying one experiment configuration.

    :param config_path: optional JSON experiment file.
    :param overrides: ``CIRCLE_MAPS_*`` values applied last.
    """
    app = Flask("random_circle_maps")
    RandomCircleMaps.init_config(app)
    if config_path:
        merge_config(app, read_experiment_file(config_path))
    merge_config(app, overrides)
    RandomCircleMaps(app)
    return app
