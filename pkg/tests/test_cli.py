# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Command line tests."""

import json

import pytest
from click.testing import CliRunner

from random_circle_maps.cli import cli
from random_circle_maps.decorators import EXIT_BUDGET, EXIT_IO, EXIT_VALIDATION


@pytest.fixture()
def runner():
    """Click runner."""
    return CliRunner()


def _config_file(tmp_path, data):
    path = tmp_path / "experiment.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_validate(runner, tmp_path):
    """The default family passes and a manifest is written."""
    result = runner.invoke(cli, ["--out", str(tmp_path), "validate"])
    assert result.exit_code == 0, result.output
    assert "validate: passed" in result.output
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["command"] == "validate"
    assert manifest["passed"] is True
    assert "validate" in manifest["timings"]
    assert str(tmp_path / "validation.json") in manifest["outputs"]


def test_validate_failure(runner, tmp_path):
    """Large noise amplitude violates the hypotheses."""
    config = _config_file(tmp_path, {"family": {"epsilon": 0.5}})
    out = tmp_path / "out"
    result = runner.invoke(cli, ["--config", config, "--out", str(out), "validate"])
    assert result.exit_code == EXIT_VALIDATION
    assert "validate: FAILED" in result.output
    assert json.loads((out / "manifest.json").read_text())["passed"] is False


def test_missing_config(runner, tmp_path):
    """Unreadable experiment files are I/O errors."""
    result = runner.invoke(
        cli, ["--config", str(tmp_path / "missing.json"), "--out", str(tmp_path), "validate"]
    )
    assert result.exit_code == EXIT_IO


def test_invalid_config(runner, tmp_path):
    """Schema errors exit with the validation status."""
    config = _config_file(tmp_path, {"historic": {"rule": "cubic"}})
    result = runner.invoke(cli, ["--config", config, "--out", str(tmp_path), "show-config"])
    assert result.exit_code == EXIT_VALIDATION


def test_show_config(runner, tmp_path):
    """Canonical configuration, its hash and the schema."""
    result = runner.invoke(cli, ["--out", str(tmp_path), "--seed", "3", "show-config"])
    assert result.exit_code == 0, result.output
    assert '"point": 3' in result.output
    assert "hash: " in result.output
    assert not (tmp_path / "manifest.json").exists()

    result = runner.invoke(cli, ["--out", str(tmp_path), "show-config", "--schema"])
    assert result.exit_code == 0
    assert json.loads(result.output)["historic"]["type"] == "object"


def test_conjugacy(runner, tmp_path):
    """A small grid passes its certificates."""
    result = runner.invoke(
        cli, ["--out", str(tmp_path), "--no-cache", "conjugacy", "--level", "4"]
    )
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "conjugacy_grid_n4.csv").read_text().splitlines()
    assert lines[0] == "# omega=0.0"
    assert len(lines) == 5 + 1 + 2**4 + 1
    summary = json.loads((tmp_path / "conjugacy.json").read_text())
    assert summary["points"] == 17
    assert summary["certificates"]["increasing"]["passed"]
    assert not (tmp_path / ".cache").exists()


def test_partition_and_code(runner, tmp_path):
    """Partition and coding outputs."""
    result = runner.invoke(cli, ["--out", str(tmp_path), "partition", "--omega", "0.3"])
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "partition.json").read_text())
    assert summary["J"]["kind"] == "arc"
    assert (summary["J"]["left"], summary["J"]["length"]) == pytest.approx((0.73, 0.04))
    assert len((tmp_path / "partition.csv").read_text().splitlines()) == 3

    result = runner.invoke(cli, ["--out", str(tmp_path), "code", "--x", "0.3", "--n", "6"])
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "code.json").read_text())
    assert len(summary["word"]) == 6
    assert summary["certificates"]["round_trip"]["passed"]
    assert len((tmp_path / "cylinders.csv").read_text().splitlines()) == 7


def test_budget(runner, tmp_path):
    """Four geometric blocks do not fit in the default budget."""
    config = _config_file(tmp_path, {"historic": {"rule": "geometric", "blocks": 4}})
    result = runner.invoke(cli, ["--config", config, "--out", str(tmp_path), "historic"])
    assert result.exit_code == EXIT_BUDGET
    assert "Largest feasible result: [0, 56, 5376, 1032192]" in result.output
