# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Experiment orchestration: stages, caching and the run manifest."""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path

import numpy as np

from .cache import DiskCache, cache_key
from .circle import CircleInterval
from .conjugacy import (
    ConjugacyGrid,
    InverseBranchSolver,
    conjugacy_grid,
    conjugacy_residual,
    default_depth,
    family_hash,
    noise_stability,
    residual_bound,
)
from .errors import InvalidFamily
from .historic import (
    BumpObservable,
    OrbitContext,
    build_bar_s,
    build_schedule,
    coverage,
    oscillation_report,
    past_orbit_points,
    residual_witness,
    shadowing_report,
    target_integral,
)
from .symbolic import (
    SeededDigitsStream,
    cylinder,
    encode_point,
    gap_interval,
    partition,
    verify_gap,
)
from .system import BaseDynamics, validate_hypotheses

logger = logging.getLogger(__name__)

HYPOTHESIS_KEYS = ("name", "delta0", "eta", "b", "omega_samples", "x_samples")
"""Family section keys that are not family constructor arguments."""


@dataclass
class RunManifest:
    """What a command did, with which configuration, and whether it passed."""

    command: str
    config_hash: str
    version: str
    started: str
    wall_clock: float = 0.0
    timings: dict = field(default_factory=dict)
    certificates: dict = field(default_factory=dict)
    outputs: list = field(default_factory=list)
    passed: bool = True

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "command": self.command,
            "config_hash": self.config_hash,
            "version": self.version,
            "started": self.started,
            "wall_clock": self.wall_clock,
            "timings": dict(self.timings),
            "certificates": dict(self.certificates),
            "outputs": list(self.outputs),
            "passed": self.passed,
        }


class Experiment:
    """Builds every domain object of one configuration and runs the stages."""

    def __init__(self, config, families):
        """Constructor.

        :param config: an :class:`~random_circle_maps.schemas.ExperimentConfig`.
        :param families: registry ``name -> MapFamily subclass``.
        """
        self.config = config
        self.families = families
        self.timings = {}

    @contextmanager
    def stage(self, name):
        """Time a stage; repeated stages accumulate."""
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            self.timings[name] = self.timings.get(name, 0.0) + elapsed
            logger.debug("stage %s took %.3fs", name, elapsed)

    def manifest(self, command):
        """A fresh manifest for ``command``."""
        from . import __version__

        return RunManifest(
            command=command,
            config_hash=self.config.hash,
            version=__version__,
            started=datetime.now(timezone.utc).replace(microsecond=0).isoformat(),
        )

    @cached_property
    def output_dir(self):
        """Output directory."""
        return Path(self.config.output["directory"])

    @cached_property
    def cache(self):
        """The result cache."""
        directory = self.config.cache_dir or self.output_dir / ".cache"
        return DiskCache(directory, enabled=self.config.cache_enabled)

    @cached_property
    def maps(self):
        """The unvalidated :class:`~random_circle_maps.system.MapFamily`."""
        section = self.config.family
        family_class = self.families[section["name"]]
        kwargs = {k: v for k, v in section.items() if k not in HYPOTHESIS_KEYS}
        return family_class(**kwargs)

    def validation_report(self):
        """Validation report, whether it passes or not."""
        section = self.config.family
        with self.stage("validate"):
            try:
                return validate_hypotheses(
                    self.maps,
                    delta0=section["delta0"],
                    eta=section["eta"],
                    b_interval=tuple(section["b"]),
                    omega_samples=section.get("omega_samples", 256),
                    x_samples=section.get("x_samples", 4096),
                )
            except InvalidFamily as e:
                return e.report

    @cached_property
    def fam(self):
        """The validated :class:`~random_circle_maps.system.RandomMapFamily`.

        :raises InvalidFamily: when the configuration violates a hypothesis.
        """
        report = self.validation_report()
        if not report.passed:
            raise InvalidFamily(report.violated, report)
        return report.family

    @cached_property
    def solver(self):
        """Inverse branch solver."""
        return InverseBranchSolver(**self.config.solver)

    @cached_property
    def base(self):
        """Noise base."""
        return BaseDynamics(**self.config.base)

    @property
    def omega0(self):
        """Working noise value."""
        return self.base.omega0

    @cached_property
    def p_depth(self):
        """Pullback depth of the random fixed point."""
        return self.config.conjugacy["p_depth"] or default_depth(self.fam)

    @cached_property
    def observable(self):
        """The bump built on the gap interval."""
        return BumpObservable.from_gap(self.fam.delta0, self.fam.k)

    @cached_property
    def context(self):
        """Orbit evaluation settings."""
        historic = self.config.historic
        return OrbitContext(
            self.fam,
            self.solver,
            self.base,
            depth=self.config.coding["depth"],
            p_depth=self.p_depth,
            batch_size=historic.get("batch_size", 2**18),
            chunk=self.config.coding["chunk"],
            workers=self.config.workers,
        )

    def sampled_omegas(self, count):
        """Reproducible noise samples."""
        rng = np.random.default_rng(self.config.seeds["sampling"])
        return rng.random(count)

    def _key(self, *parts):
        return cache_key(self.config.hash, *parts)

    def grid(self, omega, level):
        """Conjugacy grid, through the cache."""
        section = self.config.conjugacy

        def compute():
            return conjugacy_grid(
                self.fam, self.solver, self.base, omega, level,
                p_depth=self.p_depth, max_points=section["max_points"],
            ).points

        points = self.cache.array(self._key("grid", repr(omega), level, self.p_depth), compute)
        return ConjugacyGrid(
            omega=omega,
            level=level,
            k=self.fam.k,
            points=points,
            p_depth=self.p_depth,
            family_key=family_hash(self.fam),
        )

    def conjugacy(self, omega, level):
        """Grid at ``omega`` plus its residual and stability certificates."""
        with self.stage("conjugacy"):
            grid = self.grid(omega, level)
            residual = conjugacy_residual(
                self.fam, self.solver, self.base, omega, level,
                samples=self.config.conjugacy["residual_samples"],
                grid_source=lambda w: self.grid(w, level),
                seed=self.config.seeds["sampling"],
            )
            others = [self.grid(float(w), level) for w in self.sampled_omegas(4)]
            stability = noise_stability([grid] + others)
        bound = residual_bound(self.fam, level)
        gap_bound = self.fam.lam ** (-level)
        certificates = {
            "residual": {"value": residual, "bound": bound, "passed": residual <= bound},
            "max_gap": {
                "value": float(np.max(grid.gaps)),
                "bound": gap_bound,
                "passed": bool(np.max(grid.gaps) <= gap_bound + 1e-12),
            },
            "increasing": {"passed": bool(np.all(grid.gaps > 0))},
            "noise_stability": {
                "value": stability,
                "bound": self.fam.delta0,
                "passed": stability <= self.fam.delta0,
            },
        }
        return grid, certificates

    def partition(self, omega, level=1):
        """Partition at ``omega``, the gap arcs and the sampled gap check."""
        with self.stage("partition"):
            view = partition(self.fam, self.solver, self.base, omega, level, self.p_depth)
            inner, outer = gap_interval(self.fam.delta0, self.fam.k)
            gap_ok = verify_gap(
                self.fam, self.solver, self.base, self.sampled_omegas(1000), outer, self.p_depth
            )
        return view, (inner, outer), {"gap": {"passed": gap_ok}}

    def code(self, omega, x, n):
        """Itinerary of ``x``, its cylinders and the decode round trip."""
        with self.stage("code"):
            word = encode_point(self.fam, self.solver, self.base, omega, x, n, self.p_depth)
            prefixes = [word.slice(0, j) for j in range(n)]
            cylinders = [
                cylinder(self.fam, self.solver, self.base, omega, w, self.p_depth)
                for w in prefixes
            ]
            decoded = cylinders[-1].left
            inside = cylinders[-1].contains(x) or cylinders[-1].right == x
        return word, prefixes, cylinders, {
            "round_trip": {"decoded": decoded, "contains_x": bool(inside), "passed": bool(inside)}
        }

    @cached_property
    def second_stream(self):
        """``s''``: digits of the seeded random point."""
        return SeededDigitsStream(self.config.seeds["point"], self.fam.k)

    @cached_property
    def schedule(self):
        """Certified block schedule.

        :raises BudgetExceeded: when the configured blocks do not fit.
        """
        historic = self.config.historic
        with self.stage("schedule"):
            return build_schedule(
                self.observable,
                self.fam.lam,
                historic["blocks"],
                rule=historic["rule"],
                budget=historic["budget"],
            )

    @cached_property
    def bar_s(self):
        """The spliced stream."""
        return build_bar_s(self.schedule, self.second_stream)

    def target(self):
        """``I*`` as a JSON document."""
        historic = self.config.historic

        def compute():
            return target_integral(
                self.fam, self.solver, self.base, self.observable,
                q_omega=historic["q_omega"], q_x=historic["q_x"], level=historic["level"],
                max_points=self.config.conjugacy["max_points"],
            ).to_dict()

        with self.stage("target"):
            return self.cache.document(
                self._key("target", historic["q_omega"], historic["q_x"], historic["level"]),
                compute,
            )

    def historic(self, omega):
        """Oscillation report of the spliced orbit at ``omega``."""
        target = self.target()

        def compute():
            return oscillation_report(
                self.context, omega, self.schedule, self.bar_s, self.observable,
                target["value"], slack=self.config.historic["slack"],
            ).to_dict()

        with self.stage("historic"):
            return self.cache.document(
                self._key("historic", repr(omega), self.schedule.to_dict()), compute
            )

    def density(self, omega):
        """Past-orbit histogram coverage and shadowing in the second block."""
        historic = self.config.historic
        with self.stage("density"):
            points = past_orbit_points(self.context, omega, self.bar_s, historic["past_points"])
            report = coverage(points, historic["bins"]).to_dict()
            shadowing = None
            if self.schedule.blocks >= 2:
                view = partition(self.fam, self.solver, self.base, omega, 1, self.p_depth)
                shadowing = shadowing_report(
                    self.context, omega, self.schedule, self.bar_s, 2, view.max_length,
                    count=historic["past_points"],
                ).to_dict()
        return points, report, shadowing

    def witness(self, omega):
        """Witness search for the first past-orbit points."""
        historic = self.config.historic
        target = self.target()["value"]
        with self.stage("witness"):
            return residual_witness(
                self.context,
                omega,
                self.bar_s,
                self.observable,
                range(historic["witnesses"]),
                alpha=historic["alpha_fraction"] * target,
                beta=historic["beta_fraction"] * target,
                n_max=self.schedule.horizon,
                target=target,
            ).to_dict()


def arc_to_dict(interval):
    """JSON form of a :class:`~random_circle_maps.circle.CircleInterval`."""
    if not isinstance(interval, CircleInterval):
        raise TypeError("expected a CircleInterval")
    return {"kind": interval.kind.value, "left": interval.left, "length": interval.length}
