# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""CSV tables and JSON summaries."""

import csv
import json
from pathlib import Path

import numpy as np

from .conjugacy import ConjugacyGrid

GRID_HEADER = ("omega", "level", "k", "p_depth", "family")


def _prepare(path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def write_rows_csv(path, rows, fieldnames=None):
    """Write a list of flat dicts; columns default to the keys of the first row."""
    path = _prepare(path)
    rows = list(rows)
    if fieldnames is None:
        fieldnames = list(rows[0]) if rows else []
    with open(path, "w", newline="", encoding="utf-8") as fp:
        writer = csv.DictWriter(fp, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    return path


def read_rows_csv(path):
    """Rows of a CSV written by :func:`write_rows_csv`, as dicts of strings."""
    with open(path, newline="", encoding="utf-8") as fp:
        return list(csv.DictReader(fp))


def write_json(path, document):
    """Write a JSON document with sorted keys."""
    path = _prepare(path)
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(document, fp, sort_keys=True, indent=2)
        fp.write("\n")
    return path


def write_grid_csv(path, grid):
    """Grid as ``j,a_j_lift`` rows below ``# key=value`` header lines."""
    path = _prepare(path)
    meta = {
        "omega": repr(grid.omega),
        "level": grid.level,
        "k": grid.k,
        "p_depth": grid.p_depth,
        "family": grid.family_key,
    }
    with open(path, "w", newline="", encoding="utf-8") as fp:
        for name in GRID_HEADER:
            fp.write(f"# {name}={meta[name]}\n")
        writer = csv.writer(fp, lineterminator="\n")
        writer.writerow(("j", "a_j_lift"))
        for j, value in enumerate(grid.points):
            writer.writerow((j, repr(float(value))))
    return path


def read_grid_csv(path):
    """Inverse of :func:`write_grid_csv`."""
    meta = {}
    rows = []
    with open(path, newline="", encoding="utf-8") as fp:
        lines = fp.read().splitlines()
    body = []
    for line in lines:
        if line.startswith("# "):
            name, _, value = line[2:].partition("=")
            meta[name] = value
        else:
            body.append(line)
    for row in csv.DictReader(body):
        rows.append(float(row["a_j_lift"]))
    return ConjugacyGrid(
        omega=float(meta["omega"]),
        level=int(meta["level"]),
        k=int(meta["k"]),
        points=np.asarray(rows),
        p_depth=int(meta["p_depth"]),
        family_key=meta["family"],
    )


def cylinder_rows(words, intervals):
    """Rows ``(word, left, length)`` for a cylinder dump."""
    return [
        {"word": str(word), "left": repr(interval.left), "length": repr(interval.length)}
        for word, interval in zip(words, intervals)
    ]
