# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""End-to-end runs of the default experiment.

These take minutes; run them with ``pytest --runslow``.
"""

import json
import math

import numpy as np
import pytest
from click.testing import CliRunner

from random_circle_maps.cli import cli
from random_circle_maps.conjugacy import (
    conjugacy_grid,
    conjugacy_residual,
    grid_distance,
)
from random_circle_maps.historic import (
    BumpObservable,
    OrbitContext,
    birkhoff_average,
    block_length,
)
from random_circle_maps.reports import read_grid_csv, read_rows_csv
from random_circle_maps.symbolic import (
    BlockCompositeStream,
    SeededDigitsStream,
    SymbolWord,
    cylinder,
    equivariance_check,
)

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def results(tmp_path_factory):
    """Shared output directory of the default experiment."""
    return tmp_path_factory.mktemp("acceptance")


def _run(*args):
    result = CliRunner().invoke(cli, [str(a) for a in args])
    assert result.exit_code == 0, result.output
    return result


def test_identity_grid(tmp_path):
    """Without perturbation the conjugacy grid is the dyadic grid."""
    config = tmp_path / "identity.json"
    config.write_text(json.dumps({"family": {"a": 0.0, "epsilon": 0.0}}))
    _run("--config", config, "--out", tmp_path, "conjugacy", "--omega", 0.3, "--level", 12)
    grid = read_grid_csv(tmp_path / "conjugacy_grid_n12.csv")
    expected = np.arange(2**12 + 1) / 2**12
    assert np.max(np.abs(grid.points - expected)) <= 1e-9
    summary = json.loads((tmp_path / "conjugacy.json").read_text())
    assert summary["certificates"]["residual"]["value"] <= 1e-9


def test_historic(results):
    """Averages alternate between the two targets at every checkpoint."""
    _run("--out", results, "historic")
    rows = read_rows_csv(results / "oscillation.csv")
    assert [row["parity"] for row in rows] == ["odd", "even", "odd", "even"]
    assert all(row["passed"] == "True" for row in rows)
    summary = json.loads((results / "oscillation.json").read_text())
    assert summary["passed"]
    assert summary["target"]["value"] > 0.05
    assert summary["gap"] > 0
    manifest = json.loads((results / "manifest.json").read_text())
    assert manifest["certificates"]["schedule"] is True


def test_historic_reproducible(results, tmp_path):
    """Recomputing with more workers and no cache gives identical bytes."""
    _run("--out", tmp_path, "--workers", 2, "--no-cache", "historic")
    first = (results / "oscillation.csv").read_bytes()
    assert (tmp_path / "oscillation.csv").read_bytes() == first


def test_density(results):
    """The past orbit fills every histogram bin."""
    _run("--out", results, "density")
    summary = json.loads((results / "density.json").read_text())
    assert summary["coverage"]["covered"]
    assert summary["shadowing"]["passed"]


def test_witness(results):
    """Every sampled past-orbit point has both witnesses."""
    _run("--out", results, "witness")
    summary = json.loads((results / "witness.json").read_text())
    assert summary["failures"] == []
    assert len(read_rows_csv(results / "witnesses.csv")) == 10


@pytest.mark.parametrize("seed", range(20))
def test_classical_averages(identity_fam, solver, base, seed):
    """Digits of a random point give Lebesgue averages for the doubling map."""
    obs = BumpObservable.from_gap(identity_fam.delta0, identity_fam.k)
    ctx = OrbitContext(identity_fam, solver, base, batch_size=2**14)
    stream = SeededDigitsStream(seed, identity_fam.k)
    average = birkhoff_average(ctx, 0.0, stream, obs, 10**5)
    assert abs(average - obs.integral) <= 0.02


def test_residual_slope(fam, solver, base):
    """Residuals for n = 6..14 decay at least like lambda^-n."""
    levels = np.arange(6, 15)
    residuals = np.array(
        [conjugacy_residual(fam, solver, base, 0.0, int(n)) for n in levels]
    )
    assert np.all(residuals > 0)
    slope = np.polyfit(levels, np.log(residuals), 1)[0]
    assert slope <= -math.log(fam.lam) + 0.05
    assert residuals[-1] <= 5 * fam.lam ** (-14)


def test_noise_stability_pairs(fam, solver, base):
    """Level-12 grids of 200 random noise pairs stay within delta0."""
    rng = np.random.default_rng(12)
    for first, second in rng.random((200, 2)):
        a = conjugacy_grid(fam, solver, base, float(first), 12)
        b = conjugacy_grid(fam, solver, base, float(second), 12)
        assert grid_distance(a, b) <= fam.delta0


def test_cylinder_lengths(fam, solver, base):
    """500 random cylinders of length up to 30 shrink like lambda^-n."""
    rng = np.random.default_rng(30)
    for _ in range(500):
        n = int(rng.integers(1, 31))
        word = SymbolWord(tuple(rng.integers(0, fam.k, n)), fam.k)
        arc = cylinder(fam, solver, base, float(rng.random()), word)
        assert arc.length <= fam.lam ** (-n) + 1e-8


@pytest.mark.parametrize("seed", (11, 12, 13))
def test_equivariance_depth(fam, solver, base, seed):
    """Depth 40 is exact to rounding; depth 20 is worse by lambda^18."""
    stream = SeededDigitsStream(seed, fam.k)
    fine = equivariance_check(fam, solver, base, 0.1, stream, 40, 100)
    coarse = equivariance_check(fam, solver, base, 0.1, stream, 20, 100)
    assert fine <= 3 * fam.lam ** (-40) + 1e-9
    assert coarse >= fam.lam**18 * fine


@pytest.mark.parametrize("rho", (1.0, 0.5, 0.1))
def test_block_length_property(fam, solver, base, rho):
    """Codes agreeing on [m, n-1] give averages at n/2 within rho."""
    obs = BumpObservable.from_gap(fam.delta0, fam.k)
    ctx = OrbitContext(fam, solver, base, depth=40, batch_size=2**12)
    rng = np.random.default_rng(int(rho * 100))
    m = int(rng.integers(0, 11))
    n = block_length(m, rho, obs, fam.lam)
    half = n // 2
    for pair in range(50):
        s = SeededDigitsStream(2 * pair, fam.k)
        other = SeededDigitsStream(2 * pair + 1, fam.k)
        if m:
            t = BlockCompositeStream((0, m, n, n + 1), other, s.shift(m))
        else:
            t = BlockCompositeStream((0, n, n + 1), s, other)
        agree = np.arange(m, n)
        assert np.array_equal(s.at(agree), t.at(agree))
        omega = float(rng.random())
        first = birkhoff_average(ctx, omega, s, obs, half)
        second = birkhoff_average(ctx, omega, t, obs, half)
        assert abs(first - second) <= rho + 1e-3
