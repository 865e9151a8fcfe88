# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Birkhoff average and historic report tests."""

import numpy as np
import pytest

from random_circle_maps.circle import circle_distance
from random_circle_maps.historic import (
    BumpObservable,
    OrbitContext,
    birkhoff_average,
    birkhoff_series,
    build_bar_s,
    build_schedule,
    coverage,
    oscillation_report,
    past_orbit_points,
    residual_witness,
    segment_sum,
    shadowing_report,
    split_average,
    target_integral,
)
from random_circle_maps.symbolic import PeriodicStream, SeededDigitsStream, decode_point


@pytest.fixture(scope="module")
def obs(fam):
    """Bump on the gap of the default family."""
    return BumpObservable.from_gap(fam.delta0, fam.k)


@pytest.fixture(scope="module")
def ctx(fam, solver, base):
    """Small batches so that batching is exercised."""
    return OrbitContext(fam, solver, base, depth=40, batch_size=64, chunk=16)


@pytest.fixture(scope="module")
def schedule(obs, fam):
    """Two harmonic blocks."""
    return build_schedule(obs, fam.lam, 2, rule="harmonic")


def test_zero_stream_never_visits_the_gap(ctx, obs):
    """The all-zeros orbit follows the random fixed point, far from J'."""
    assert birkhoff_average(ctx, 0.2, PeriodicStream((0,)), obs, 300) == 0.0


def test_segment_sum_is_worker_independent(ctx, obs):
    """Worker count does not change a single bit."""
    stream = SeededDigitsStream(3)
    serial = segment_sum(ctx, 0.1, stream, obs, 5, 500)
    threaded = segment_sum(
        OrbitContext(ctx.fam, ctx.solver, ctx.base, ctx.depth, batch_size=64, chunk=16, workers=4),
        0.1,
        stream,
        obs,
        5,
        500,
    )
    assert serial == threaded
    assert segment_sum(ctx, 0.1, stream, obs, 0, 0) == 0.0


def test_split_average(ctx, obs):
    """Head and tail averages recombine into the full average."""
    direct, recombined = split_average(ctx, 0.35, SeededDigitsStream(4), obs, 400, 150)
    assert direct == pytest.approx(recombined, abs=1e-9)
    with pytest.raises(ValueError):
        split_average(ctx, 0.35, SeededDigitsStream(4), obs, 100, 100)


def test_birkhoff_series(ctx, obs):
    """Series values are the averages at each checkpoint."""
    stream = SeededDigitsStream(8)
    series = birkhoff_series(ctx, 0.5, stream, obs, [200, 50, 120])
    assert series.checkpoints == [50, 120, 200]
    for c, value in zip(series.checkpoints, series.values):
        assert value == pytest.approx(birkhoff_average(ctx, 0.5, stream, obs, c), abs=1e-12)
    assert series.to_dict()["stream"]["seed"] == 8
    with pytest.raises(ValueError):
        birkhoff_series(ctx, 0.5, stream, obs, [0])


def test_target_integral(fam, solver, base, obs):
    """I* is close to the Lebesgue integral of the bump."""
    target = target_integral(fam, solver, base, obs, q_omega=4, q_x=1024, level=7)
    assert 0.03 < target.value < 0.09
    assert target.bound > 0
    assert target.to_dict()["q_x"] == 1024


def test_oscillation_report(ctx, obs, schedule):
    """Odd checkpoints sit at zero and rows carry their bounds."""
    bar_s = build_bar_s(schedule, SeededDigitsStream(20260101))
    report = oscillation_report(ctx, 0.0, schedule, bar_s, obs, 0.06)
    assert [row.j for row in report.rows] == [1, 2]
    first, second = report.rows
    assert first.parity == "odd"
    assert first.average == 0.0
    assert first.passed
    assert second.parity == "even"
    assert second.checkpoint == schedule.boundaries[2] // 2
    assert second.xi == pytest.approx(1 - schedule.boundaries[1] / second.checkpoint)
    assert report.gap == pytest.approx(second.average)
    row = first.to_dict()
    assert list(row) == [
        "j",
        "parity",
        "N_j",
        "checkpoint",
        "B",
        "deviation",
        "bound",
        "rho_term",
        "xi",
        "tail_average",
        "split_deviation",
        "split_bound",
        "passed",
    ]


def test_past_orbit_points(ctx):
    """Past-orbit points are decodes of shifted codes at the same omega."""
    stream = SeededDigitsStream(12)
    points = past_orbit_points(ctx, 0.25, stream, 30, start=5)
    assert points.shape == (30,)
    assert np.all((points >= 0) & (points < 1))
    for i in (0, 29):
        expected, _ = decode_point(
            ctx.fam, ctx.solver, ctx.base, 0.25, stream.shift(5 + i), ctx.depth
        )
        assert circle_distance(points[i], expected) < 1e-12


def test_coverage():
    """First cover index of a histogram."""
    report = coverage(np.array([0.05, 0.15, 0.55, 0.95, 0.35, 0.25, 0.45, 0.65, 0.75, 0.85]), 10)
    assert report.covered
    assert report.first_cover == 10
    assert report.hits == [1] * 10
    partial = coverage(np.linspace(0, 0.5, 100, endpoint=False), 10)
    assert not partial.covered
    assert partial.to_dict()["first_cover"] is None


def test_shadowing(ctx, schedule):
    """In an even block the spliced past orbit tracks the s'' one."""
    bar_s = build_bar_s(schedule, SeededDigitsStream(6))
    report = shadowing_report(ctx, 0.4, schedule, bar_s, 2, 0.6, count=40)
    assert report.passed
    assert report.to_dict()["checked"] == 40
    with pytest.raises(ValueError):
        shadowing_report(ctx, 0.4, schedule, bar_s, 1, 0.6)


def test_residual_witness(ctx, obs):
    """Missing indices are reported, not raised."""
    report = residual_witness(ctx, 0.0, PeriodicStream((0,)), obs, range(2), 0.01, 0.02, 100)
    assert not report.passed
    assert report.failures == [0, 1]
    assert report.results[0].below_index == 1
    assert report.results[0].above_index is None
    with pytest.raises(ValueError):
        residual_witness(ctx, 0.0, PeriodicStream((0,)), obs, range(2), 0.5, 0.2, 100)
    with pytest.raises(ValueError):
        residual_witness(ctx, 0.0, PeriodicStream((0,)), obs, range(2), 0.1, 0.2, 0)
    stream = PeriodicStream((0,))
    with pytest.raises(ValueError):
        residual_witness(ctx, 0.0, stream, obs, range(2), 0.01, 0.06, 100, target=0.05)
    with pytest.raises(ValueError):
        residual_witness(ctx, 0.0, stream, obs, range(2), 0.0, 0.02, 100, target=0.05)
    report = residual_witness(ctx, 0.0, stream, obs, range(1), 0.01, 0.02, 100, target=0.05)
    assert report.alpha == 0.01
