# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Command line interface.

Every command writes its tables and summaries to the output directory and
finishes with ``manifest.json``. Exit status is 0 on success, 1 when a
hypothesis or certificate fails, 2 on a budget overrun and 3 on I/O errors.
"""

import json
import logging
import time

import click
from flask import current_app, g

from .decorators import EXIT_VALIDATION, exit_codes
from .factory import create_app
from .reports import cylinder_rows, write_grid_csv, write_json, write_rows_csv
from .runner import arc_to_dict
from .schemas import ExperimentConfigSchema, canonical_json, jsonify_schema

omega_option = click.option(
    "--omega", type=float, default=None, help="Noise value, defaults to base.omega0."
)


def _experiment():
    return current_app.extensions["random-circle-maps"].experiment(current_app)


def _omega(exp, omega):
    return exp.omega0 if omega is None else omega


def _finish(exp, command, outputs, certificates, passed):
    """Write the manifest, report the outcome and set the exit status."""
    manifest = exp.manifest(command)
    manifest.wall_clock = time.perf_counter() - g.started
    manifest.timings = dict(exp.timings)
    manifest.certificates = certificates
    manifest.outputs = [str(p) for p in outputs]
    manifest.passed = bool(passed)
    path = write_json(exp.output_dir / "manifest.json", manifest.to_dict())
    for name, seconds in sorted(exp.timings.items()):
        current_app.logger.info("stage %s: %.3fs", name, seconds)
    for output in outputs:
        click.echo(f"wrote {output}")
    click.echo(f"wrote {path}")
    if passed:
        click.secho(f"{command}: passed", fg="green")
    else:
        click.secho(f"{command}: FAILED", fg="red")
        click.get_current_context().exit(EXIT_VALIDATION)


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="JSON experiment file.",
)
@click.option("--out", type=click.Path(file_okay=False), default=None, help="Output directory.")
@click.option("--seed", type=int, default=None, help="Seed of the random point x*.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker threads.")
@click.option("--no-cache", is_flag=True, default=False, help="Recompute everything.")
@click.option("-v", "--verbose", is_flag=True, default=False, help="Log stage progress.")
@click.pass_context
@exit_codes
def cli(ctx, config_path, out, seed, workers, no_cache, verbose):
    """Random expanding circle maps: conjugacy, coding and historic orbits."""
    overrides = {}
    if out is not None:
        overrides["CIRCLE_MAPS_OUTPUT"] = {"directory": out}
    if seed is not None:
        overrides["CIRCLE_MAPS_SEEDS"] = {"point": seed}
    if workers is not None:
        overrides["CIRCLE_MAPS_WORKERS"] = workers
    if no_cache:
        overrides["CIRCLE_MAPS_CACHE_ENABLED"] = False
    app = create_app(config_path, **overrides)
    if verbose:
        app.logger.setLevel(logging.INFO)
    ctx.with_resource(app.app_context())
    g.started = time.perf_counter()


@cli.command()
@exit_codes
def validate():
    """Check the standing hypotheses of the configured family."""
    exp = _experiment()
    report = exp.validation_report()
    for check in report.checks:
        colour = "green" if check.passed else "red"
        click.secho(check.describe(), fg=colour)
    click.echo(f"lambda0={report.lambda0!r} lambda={report.lam!r}")
    if report.epsilon_max is not None:
        click.echo(f"admissible epsilon up to {report.epsilon_max!r}")
    path = write_json(exp.output_dir / "validation.json", report.to_dict())
    _finish(exp, "validate", [path], {"hypotheses": report.to_dict()["checks"]}, report.passed)


@cli.command()
@omega_option
@click.option("--level", type=click.IntRange(min=0), default=None, help="Grid level n.")
@exit_codes
def conjugacy(omega, level):
    """Compute the level-n conjugacy grid and its residual."""
    exp = _experiment()
    omega = _omega(exp, omega)
    level = exp.config.conjugacy["level"] if level is None else level
    current_app.logger.info("conjugacy grid at omega=%r level=%d", omega, level)
    grid, certificates = exp.conjugacy(omega, level)
    grid_path = write_grid_csv(exp.output_dir / f"conjugacy_grid_n{level}.csv", grid)
    summary = {
        "omega": omega,
        "level": level,
        "points": int(grid.points.size),
        "lipschitz": grid.lipschitz,
        "certificates": certificates,
    }
    json_path = write_json(exp.output_dir / "conjugacy.json", summary)
    for name, cert in certificates.items():
        click.echo(f"{name}: {cert}")
    passed = all(c["passed"] for c in certificates.values())
    _finish(exp, "conjugacy", [grid_path, json_path], certificates, passed)


@cli.command()
@omega_option
@click.option("--level", type=click.IntRange(min=1), default=1, help="Partition level.")
@exit_codes
def partition(omega, level):
    """Markov partition at omega and the gap arcs J and J'."""
    exp = _experiment()
    omega = _omega(exp, omega)
    view, (inner, outer), certificates = exp.partition(omega, level)
    rows = [
        {
            "j": j,
            "left": repr(float(a)),
            "right_lift": repr(float(b)),
            "length": repr(float(b - a)),
        }
        for j, (a, b) in enumerate(zip(view.boundaries[:-1], view.boundaries[1:]))
    ]
    csv_path = write_rows_csv(exp.output_dir / "partition.csv", rows)
    summary = {
        "omega": omega,
        "level": level,
        "c_omega": view.max_length,
        "J": arc_to_dict(inner),
        "J_prime": arc_to_dict(outer),
        "certificates": certificates,
    }
    json_path = write_json(exp.output_dir / "partition.json", summary)
    click.echo(f"C_omega = {view.max_length!r}")
    click.echo(f"J = {arc_to_dict(inner)}  J' = {arc_to_dict(outer)}")
    _finish(exp, "partition", [csv_path, json_path], certificates, certificates["gap"]["passed"])


@cli.command()
@omega_option
@click.option("--x", "x", type=float, default=None, help="Point to encode.")
@click.option("--n", "n", type=click.IntRange(min=1), default=None, help="Word length.")
@exit_codes
def code(omega, x, n):
    """Itinerary of x and the cylinders of its prefixes."""
    exp = _experiment()
    omega = _omega(exp, omega)
    x = exp.config.coding["point"] if x is None else x
    n = exp.config.coding["word_length"] if n is None else n
    word, prefixes, cylinders, certificates = exp.code(omega, x, n)
    csv_path = write_rows_csv(exp.output_dir / "cylinders.csv", cylinder_rows(prefixes, cylinders))
    summary = {
        "omega": omega,
        "x": x,
        "word": str(word),
        "index": word.index,
        "certificates": certificates,
    }
    json_path = write_json(exp.output_dir / "code.json", summary)
    click.echo(f"word = {word}")
    _finish(exp, "code", [csv_path, json_path], certificates, certificates["round_trip"]["passed"])


@cli.command()
@omega_option
@exit_codes
def historic(omega):
    """Birkhoff averages of the spliced orbit at every block checkpoint."""
    exp = _experiment()
    omega = _omega(exp, omega)
    schedule = exp.schedule
    current_app.logger.info("schedule N=%s", list(schedule.boundaries))
    report = exp.historic(omega)
    csv_path = write_rows_csv(exp.output_dir / "oscillation.csv", report["rows"])
    summary = {
        "omega": omega,
        "target": exp.target(),
        "observable": exp.observable.to_dict(),
        "gap": report["gap"],
        "schedule": report["schedule"],
        "seeds": dict(exp.config.seeds),
        "passed": report["passed"],
    }
    json_path = write_json(exp.output_dir / "oscillation.json", summary)
    for row in report["rows"]:
        click.echo(
            f"j={row['j']} {row['parity']:>4} checkpoint={row['checkpoint']} "
            f"B={row['B']:.6f} bound={row['bound']:.4f} passed={row['passed']}"
        )
    certificates = {
        "schedule": schedule.passed,
        "checkpoints": [row["passed"] for row in report["rows"]],
        "gap": report["gap"],
    }
    _finish(
        exp,
        "historic",
        [csv_path, json_path],
        certificates,
        schedule.passed and report["passed"],
    )


@cli.command()
@omega_option
@exit_codes
def density(omega):
    """Past-orbit histogram coverage and block shadowing."""
    exp = _experiment()
    omega = _omega(exp, omega)
    points, report, shadowing = exp.density(omega)
    rows = [{"l": i, "x": repr(float(x))} for i, x in enumerate(points)]
    csv_path = write_rows_csv(exp.output_dir / "past_orbit.csv", rows)
    summary = {"omega": omega, "coverage": report, "shadowing": shadowing}
    json_path = write_json(exp.output_dir / "density.json", summary)
    click.echo(f"bins covered after {report['first_cover']} points")
    passed = report["covered"] and (shadowing is None or shadowing["passed"])
    _finish(
        exp,
        "density",
        [csv_path, json_path],
        {"covered": report["covered"], "shadowing": shadowing},
        passed,
    )


@cli.command()
@omega_option
@exit_codes
def witness(omega):
    """Averages crossing below alpha and above beta for past-orbit points."""
    exp = _experiment()
    omega = _omega(exp, omega)
    report = exp.witness(omega)
    csv_path = write_rows_csv(exp.output_dir / "witnesses.csv", report["results"])
    json_path = write_json(
        exp.output_dir / "witness.json",
        {key: value for key, value in report.items() if key != "results"},
    )
    click.echo(f"alpha={report['alpha']:.6f} beta={report['beta']:.6f} n_max={report['n_max']}")
    if report["failures"]:
        click.echo(f"no witness for shifts {report['failures']}")
    _finish(
        exp, "witness", [csv_path, json_path], {"failures": report["failures"]}, report["passed"]
    )


@cli.command("show-config")
@click.option("--schema", is_flag=True, default=False, help="Print the schema instead.")
@exit_codes
def show_config(schema):
    """Print the canonical configuration and its hash."""
    if schema:
        click.echo(json.dumps(jsonify_schema(ExperimentConfigSchema()), indent=2, sort_keys=True))
        return
    exp = _experiment()
    click.echo(json.dumps(json.loads(canonical_json(exp.config)), indent=2, sort_keys=True))
    click.echo(f"hash: {exp.config.hash}")
