# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Circle arithmetic tests."""

import numpy as np
import pytest

from random_circle_maps.circle import (
    CircleInterval,
    IntervalKind,
    circle_distance,
    hausdorff_distance,
    interval_membership,
    project,
    sampled_hausdorff_distance,
)


def test_project():
    """Projection lands in [0, 1)."""
    assert project(1.25) == 0.25
    assert project(-0.25) == 0.75
    assert project(-1e-18) == 0.0
    values = project(np.array([-2.5, 0.0, 3.75]))
    assert np.allclose(values, [0.5, 0.0, 0.75])


def test_circle_distance():
    """Distance wraps around zero."""
    assert circle_distance(0.1, 0.9) == pytest.approx(0.2)
    assert circle_distance(0.3, 0.3) == 0.0
    assert circle_distance(0.0, 0.5) == pytest.approx(0.5)


def test_circle_distance_metric():
    """Symmetric, bounded by 1/2 and subject to the triangle inequality."""
    rng = np.random.default_rng(0)
    p, q, r = (rng.random(1000) * 4 - 2 for _ in range(3))
    pq = circle_distance(p, q)
    assert np.allclose(pq, circle_distance(q, p), rtol=0, atol=1e-15)
    assert np.all((pq >= 0) & (pq <= 0.5))
    assert np.all(pq <= circle_distance(p, r) + circle_distance(r, q) + 1e-12)
    assert np.all(circle_distance(p, p + 3.0) <= 1e-15)


def test_arc_through_zero():
    """Membership of an arc that crosses zero."""
    arc = CircleInterval.arc(0.9, 0.2)
    assert arc.kind is IntervalKind.ARC
    assert arc.contains(0.95)
    assert arc.contains(0.05)
    assert arc.contains(0.9)
    assert not arc.contains(0.1 + 1e-9)
    assert not arc.contains(0.5)
    assert arc.right == pytest.approx(0.1)
    mask = interval_membership(np.array([0.0, 0.5, 0.95]), arc)
    assert mask.tolist() == [True, False, True]


def test_degenerate_kinds():
    """Zero length gives a point, full length the circle."""
    assert CircleInterval.arc(0.3, 0.0).kind is IntervalKind.SINGLETON
    assert CircleInterval.arc(0.3, 1.0).kind is IntervalKind.FULL
    assert CircleInterval.full().contains(0.123)
    assert CircleInterval.singleton(0.25).contains(1.25)
    with pytest.raises(ValueError):
        CircleInterval(IntervalKind.ARC, 0.0, 1.5)


def test_shrink():
    """Shrinking removes the same length on both sides."""
    arc = CircleInterval.arc(0.6, 0.1).shrink(0.1)
    assert arc.left == pytest.approx(0.61)
    assert arc.length == pytest.approx(0.08)
    with pytest.raises(ValueError):
        CircleInterval.full().shrink(0.1)


@pytest.mark.parametrize(
    "a,b",
    [
        (CircleInterval.arc(0.1, 0.2), CircleInterval.arc(0.15, 0.3)),
        (CircleInterval.arc(0.9, 0.2), CircleInterval.arc(0.4, 0.1)),
        (CircleInterval.singleton(0.2), CircleInterval.arc(0.5, 0.3)),
        (CircleInterval.full(), CircleInterval.arc(0.0, 0.5)),
        (CircleInterval.singleton(0.1), CircleInterval.singleton(0.7)),
    ],
)
def test_hausdorff_matches_samples(a, b):
    """Closed form agrees with brute force."""
    exact = hausdorff_distance(a, b)
    assert exact == pytest.approx(sampled_hausdorff_distance(a, b), abs=1e-3)
    assert exact == pytest.approx(hausdorff_distance(b, a))


def test_hausdorff_identity():
    """An arc is at distance zero from itself."""
    arc = CircleInterval.arc(0.7, 0.5)
    assert hausdorff_distance(arc, arc) == 0.0
