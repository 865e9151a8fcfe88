# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Observable tests."""

import numpy as np
import pytest

from random_circle_maps.circle import CircleInterval
from random_circle_maps.historic import BumpObservable, bump_eval


@pytest.fixture(scope="module")
def obs():
    """Bump on the default gap."""
    return BumpObservable.from_gap(0.2, 2)


def test_bump_values(obs):
    """One on J, zero off J', in between on the ramps."""
    assert bump_eval(obs, 0.75) == 1.0
    assert bump_eval(obs, 0.73) == pytest.approx(1.0)
    assert bump_eval(obs, 0.705) == 0.0
    assert bump_eval(obs, 0.3) == 0.0
    assert bump_eval(obs, 0.72) == pytest.approx(0.5)
    assert 0.0 < bump_eval(obs, 0.785) < 1.0


def test_bump_norms(obs):
    """Norms and integral of the bump."""
    assert obs.ramp_width == pytest.approx(0.02)
    assert obs.c0_norm == 1.0
    assert obs.c1_norm == pytest.approx(75.0)
    xs = (np.arange(200000) + 0.5) / 200000
    assert np.mean(obs(xs)) == pytest.approx(obs.integral, abs=1e-6)
    slopes = np.abs(np.diff(obs(xs))) * 200000
    assert np.max(slopes) <= obs.c1_norm + 1e-6


def test_bump_vectorized(obs):
    """Arrays in, arrays out."""
    values = obs(np.array([0.0, 0.75, 1.75]))
    assert values.tolist() == [0.0, 1.0, 1.0]
    assert obs.to_dict()["c1_norm"] == pytest.approx(75.0)


def test_bump_needs_centred_arcs():
    """J must sit in the middle of J'."""
    with pytest.raises(ValueError):
        BumpObservable(CircleInterval.arc(0.2, 0.1), CircleInterval.arc(0.2, 0.1))
    with pytest.raises(ValueError):
        BumpObservable(CircleInterval.arc(0.22, 0.02), CircleInterval.arc(0.2, 0.1))
