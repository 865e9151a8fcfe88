# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""CSV and JSON output tests."""

import json

import numpy as np

from random_circle_maps.circle import CircleInterval
from random_circle_maps.conjugacy import ConjugacyGrid
from random_circle_maps.reports import (
    cylinder_rows,
    read_grid_csv,
    read_rows_csv,
    write_grid_csv,
    write_json,
    write_rows_csv,
)
from random_circle_maps.symbolic import SymbolWord


def test_grid_csv(tmp_path):
    """Grid files carry their metadata and exact float values."""
    grid = ConjugacyGrid(
        omega=0.1,
        level=2,
        k=2,
        points=np.array([0.01, 0.26, 0.5, 0.77, 1.01]),
        p_depth=53,
        family_key="abc",
    )
    path = write_grid_csv(tmp_path / "nested" / "grid.csv", grid)
    lines = path.read_text().splitlines()
    assert lines[0] == "# omega=0.1"
    assert lines[5] == "j,a_j_lift"
    loaded = read_grid_csv(path)
    assert loaded.omega == 0.1
    assert (loaded.level, loaded.k, loaded.p_depth) == (2, 2, 53)
    assert loaded.family_key == "abc"
    assert np.array_equal(loaded.points, grid.points)


def test_rows_csv(tmp_path):
    """Columns follow the first row."""
    rows = [{"j": 0, "x": "0.5"}, {"j": 1, "x": "0.25"}]
    path = write_rows_csv(tmp_path / "rows.csv", rows)
    assert path.read_text() == "j,x\n0,0.5\n1,0.25\n"
    assert read_rows_csv(path) == [{"j": "0", "x": "0.5"}, {"j": "1", "x": "0.25"}]
    empty = write_rows_csv(tmp_path / "empty.csv", [], fieldnames=["j"])
    assert empty.read_text() == "j\n"


def test_json(tmp_path):
    """JSON documents are written with sorted keys."""
    path = write_json(tmp_path / "summary.json", {"b": 1, "a": [0.5]})
    text = path.read_text()
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": [0.5], "b": 1}


def test_cylinder_rows():
    """One row per word."""
    words = [SymbolWord((), 2), SymbolWord((1,), 2)]
    arcs = [CircleInterval.full(), CircleInterval.arc(0.5, 0.5)]
    rows = cylinder_rows(words, arcs)
    assert [row["length"] for row in rows] == ["1.0", "0.5"]
    assert rows[1]["left"] == "0.5"
