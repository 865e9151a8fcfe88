# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random-Circle-Maps extension."""

import copy

import importlib_metadata

from . import config
from .errors import InvalidConfig
from .runner import Experiment
from .schemas import load_config
from .system import SineFamily


class RandomCircleMaps:
    """Random-Circle-Maps extension."""

    def __init__(self, app=None, entry_point_group=None):
        """Extension initialization."""
        self.entry_point_group = entry_point_group
        self.families = {}
        self._experiment = None
        if app:
            self.init_app(app)

    def init_app(self, app):
        """Initialize application."""
        self.init_config(app)
        self.register_family(SineFamily)
        group = self.entry_point_group or app.config["CIRCLE_MAPS_FAMILIES_ENTRY_POINT_GROUP"]
        if group:
            self.load_entry_point_group(group)
        app.extensions["random-circle-maps"] = self

    def load_entry_point_group(self, group):
        """Load map families from an entry point group."""
        entrypoints = set(importlib_metadata.entry_points(group=group))
        for ep in entrypoints:
            self.register_family(ep.load(), self._normalize_entry_point_name(ep.name))

    def register_family(self, family_class, name=None):
        """Register a :class:`~random_circle_maps.system.MapFamily` subclass.

        :param family_class: the family class.
        :param name: registry name, defaults to the class ``name`` attribute.
        """
        name = name or family_class.name
        if not name:
            raise ValueError(f"{family_class.__name__} has no registry name")
        self.families[name] = family_class

    def experiment_config(self, app):
        """Validated :class:`~random_circle_maps.schemas.ExperimentConfig` of ``app``."""
        data = {
            section: dict(app.config[f"CIRCLE_MAPS_{section.upper()}"])
            for section in config.SECTIONS
        }
        data.update(
            workers=app.config["CIRCLE_MAPS_WORKERS"],
            cache_enabled=app.config["CIRCLE_MAPS_CACHE_ENABLED"],
            cache_dir=app.config["CIRCLE_MAPS_CACHE_DIR"],
        )
        experiment = load_config(data)
        if experiment.family["name"] not in self.families:
            raise InvalidConfig(
                {"family": {"name": [f"unknown family {experiment.family['name']!r}"]}}
            )
        return experiment

    def experiment(self, app):
        """The :class:`~random_circle_maps.runner.Experiment` of ``app``, built once."""
        if self._experiment is None:
            self._experiment = Experiment(self.experiment_config(app), self.families)
        return self._experiment

    @staticmethod
    def _normalize_entry_point_name(entry_point_name):
        return entry_point_name.replace("-", "_")

    @staticmethod
    def init_config(app):
        """Initialize configuration.

        :param app: The Flask application.
        """
        # Set default configuration
        for k in dir(config):
            if k.startswith("CIRCLE_MAPS_"):
                app.config.setdefault(k, copy.deepcopy(getattr(config, k)))
