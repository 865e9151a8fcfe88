# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Pytest configuration."""

import pytest

from random_circle_maps.conjugacy import InverseBranchSolver
from random_circle_maps.factory import create_app as _create_app
from random_circle_maps.system import BaseDynamics, SineFamily, validate_hypotheses


def pytest_addoption(parser):
    """Add ``--runslow``."""
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow acceptance tests"
    )


def pytest_collection_modifyitems(config, items):
    """Skip ``slow`` tests unless ``--runslow`` is given."""
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="module")
def create_app(tmp_path_factory):
    """Application factory fixture writing into a temporary directory."""

    def factory(config_path=None, **config):
        out = tmp_path_factory.mktemp("results")
        config.setdefault("CIRCLE_MAPS_OUTPUT", {"directory": str(out)})
        return _create_app(config_path, **config)

    return factory


@pytest.fixture(scope="module")
def current_app(create_app):
    """Flask instance."""
    return create_app()


@pytest.fixture(scope="module")
def current_ext(current_app):
    """Current random-circle-maps extension."""
    return current_app.extensions["random-circle-maps"]


@pytest.fixture(scope="module")
def solver():
    """Default inverse branch solver."""
    return InverseBranchSolver()


@pytest.fixture(scope="module")
def base():
    """Golden-mean rotation."""
    return BaseDynamics()


@pytest.fixture(scope="module")
def fam():
    """Validated default sine family."""
    return validate_hypotheses(SineFamily(), omega_samples=64, x_samples=1024).family


@pytest.fixture(scope="module")
def identity_fam():
    """Validated family with ``a = eps = 0``, i.e. ``x -> 2x``."""
    maps = SineFamily(a=0.0, epsilon=0.0)
    return validate_hypotheses(maps, omega_samples=16, x_samples=256).family
