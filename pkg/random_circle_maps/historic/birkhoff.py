# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Birkhoff averages along coded orbits and the historic-behaviour reports.

Orbit points are never produced by long forward iteration: the ``i``-th
point of the orbit of ``X_s(omega)`` is ``X_{sigma^i s}(theta^i omega)``,
obtained by pullback in :func:`~random_circle_maps.symbolic.decode_orbit`.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..circle import circle_distance, project
from ..conjugacy import conjugacy_grid, h_eval
from ..symbolic import decode_lifts, decode_orbit
from ..system import theta_pow

logger = logging.getLogger(__name__)

BATCH_SIZE = 2**18

# rows of depth-d words decoded at once
PAST_BATCH_SIZE = 8192


@dataclass(frozen=True)
class OrbitContext:
    """Everything needed to evaluate orbit points."""

    fam: object
    solver: object
    base: object
    depth: int = 40
    p_depth: int = None
    batch_size: int = BATCH_SIZE
    chunk: int = 1024
    workers: int = 1

    def points(self, omega, stream, start, count):
        """Orbit points ``start .. start + count - 1`` of ``X_stream(omega)``."""
        return decode_orbit(
            self.fam, self.solver, self.base, omega, stream, start, count,
            self.depth, chunk=self.chunk, p_depth=self.p_depth,
        )

    @property
    def error_per_point(self):
        """Decoding error of one orbit point."""
        return self.fam.lam ** (-self.depth)


def segment_sum(ctx, omega, stream, obs, start, count):
    """``sum_{start <= i < start + count} phi(X_{sigma^i s}(theta^i omega))``.

    The range is cut into fixed batches whose partial sums are combined with
    :func:`math.fsum`; the worker count only changes the scheduling.
    """
    if count <= 0:
        return 0.0
    heads = range(start, start + count, ctx.batch_size)

    def partial(head):
        size = min(ctx.batch_size, start + count - head)
        return float(np.sum(obs(ctx.points(omega, stream, head, size))))

    if ctx.workers > 1 and len(heads) > 1:
        with ThreadPoolExecutor(max_workers=ctx.workers) as executor:
            partials = list(executor.map(partial, heads))
    else:
        partials = [partial(head) for head in heads]
    return math.fsum(partials)


def birkhoff_average(ctx, omega, stream, obs, n):
    """``B_n(phi; omega, X_s(omega))``."""
    if n < 1:
        raise ValueError("n must be positive")
    return segment_sum(ctx, omega, stream, obs, 0, n) / n


def split_average(ctx, omega, stream, obs, n, m):
    """``B_n`` directly and recombined from the head ``[0, m)`` and tail ``[m, n)``.

    :returns: ``(direct, recombined)``; they agree up to rounding.
    """
    if not 0 < m < n:
        raise ValueError("need 0 < m < n")
    direct = birkhoff_average(ctx, omega, stream, obs, n)
    head = birkhoff_average(ctx, omega, stream, obs, m)
    tail = birkhoff_average(ctx, theta_pow(ctx.base, omega, m), stream.shift(m), obs, n - m)
    return direct, (m / n) * head + ((n - m) / n) * tail


@dataclass
class BirkhoffSeries:
    """Birkhoff averages of one orbit at increasing checkpoints."""

    omega: float
    stream: dict
    checkpoints: list
    values: list
    depth: int
    error_bound: float

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "omega": self.omega,
            "stream": self.stream,
            "checkpoints": list(self.checkpoints),
            "values": list(self.values),
            "depth": self.depth,
            "error_bound": self.error_bound,
        }


def birkhoff_series(ctx, omega, stream, obs, checkpoints):
    """Averages at every checkpoint, accumulating segment sums in order."""
    checkpoints = sorted(int(c) for c in checkpoints)
    if not checkpoints or checkpoints[0] < 1:
        raise ValueError("checkpoints must be positive")
    partials = []
    values = []
    previous = 0
    for c in checkpoints:
        partials.append(segment_sum(ctx, omega, stream, obs, previous, c - previous))
        values.append(math.fsum(partials) / c)
        logger.debug("B_%d = %.6f", c, values[-1])
        previous = c
    return BirkhoffSeries(
        omega=omega,
        stream=stream.to_dict(),
        checkpoints=checkpoints,
        values=values,
        depth=ctx.depth,
        error_bound=obs.c1_norm * ctx.error_per_point,
    )


@dataclass
class TargetIntegral:
    """``I*``, the double integral of the observable against ``h(omega)_* m``."""

    value: float
    bound: float
    q_omega: int
    q_x: int
    level: int

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "value": self.value,
            "bound": self.bound,
            "q_omega": self.q_omega,
            "q_x": self.q_x,
            "level": self.level,
        }


def target_integral(fam, solver, base, obs, q_omega=64, q_x=4096, level=10,
                    max_points=2**20):
    """Midpoint quadrature of ``phi(h_n(omega)(x))`` over ``omega`` and ``x``.

    The bound adds the grid error ``c1 lambda^-n``, the ``x`` discretisation
    ``c1 Lip(h_n) / Q_x`` and the largest change of the inner mean between
    adjacent ``omega`` nodes.
    """
    omegas = (np.arange(q_omega) + 0.5) / q_omega
    xs = (np.arange(q_x) + 0.5) / q_x
    means = []
    lipschitz = 0.0
    for omega in omegas:
        grid = conjugacy_grid(fam, solver, base, float(omega), level, max_points=max_points)
        lipschitz = max(lipschitz, grid.lipschitz)
        means.append(math.fsum(obs(h_eval(grid, xs))) / q_x)
    means = np.asarray(means)
    variation = float(np.max(np.abs(means - np.roll(means, 1)))) if q_omega > 1 else 0.0
    bound = obs.c1_norm * (fam.lam ** (-level) + lipschitz / q_x) + variation
    return TargetIntegral(math.fsum(means) / q_omega, bound, q_omega, q_x, level)


@dataclass
class OscillationRow:
    """Checkpoint of one block with its bounds."""

    j: int
    parity: str
    length: int
    checkpoint: int
    average: float
    deviation: float
    bound: float
    rho_term: float
    xi: float
    tail_average: float
    split_deviation: float
    split_bound: float

    @property
    def passed(self):
        """Both the headline and the split bound hold."""
        return self.deviation <= self.bound and self.split_deviation <= self.split_bound

    def to_dict(self):
        """Flat representation (one CSV row)."""
        return {
            "j": self.j,
            "parity": self.parity,
            "N_j": self.length,
            "checkpoint": self.checkpoint,
            "B": self.average,
            "deviation": self.deviation,
            "bound": self.bound,
            "rho_term": self.rho_term,
            "xi": self.xi,
            "tail_average": self.tail_average,
            "split_deviation": self.split_deviation,
            "split_bound": self.split_bound,
            "passed": self.passed,
        }


@dataclass
class OscillationReport:
    """Averages of ``X_{s_bar}`` at every checkpoint against ``0`` and ``I*``."""

    series: BirkhoffSeries
    rows: list
    target: float
    schedule: dict

    @property
    def passed(self):
        """True when every row passes."""
        return all(row.passed for row in self.rows)

    @property
    def gap(self):
        """Largest even-checkpoint average minus smallest odd one."""
        even = [r.average for r in self.rows if r.parity == "even"]
        odd = [r.average for r in self.rows if r.parity == "odd"]
        if not even or not odd:
            return None
        return max(even) - min(odd)

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "target": self.target,
            "gap": self.gap,
            "passed": self.passed,
            "schedule": self.schedule,
            "series": self.series.to_dict(),
            "rows": [r.to_dict() for r in self.rows],
        }


def oscillation_report(ctx, omega, schedule, bar_s, obs, target, slack=1e-3):
    """Measure the spliced orbit at every checkpoint ``floor(N_j / 2)``.

    Odd blocks are compared with ``0`` within ``rho~_j``; even blocks with
    ``target`` within ``rho~_j`` plus the measured deviation of the
    ``s''``-average started at ``theta^{N_{j-1}} omega``. The split bound
    ``|B - xi_j B_tail| <= 2 rho~_j / 3`` is checked on every block, where
    ``B_tail`` is the average of the block's own source.
    """
    series = birkhoff_series(ctx, omega, bar_s, obs, schedule.checkpoints)
    rows = []
    for j, (value, rho) in enumerate(zip(series.values, schedule.rho), start=1):
        previous = schedule.boundaries[j - 1]
        length = schedule.boundaries[j]
        checkpoint = length // 2
        source = bar_s.first if j % 2 == 1 else bar_s.second
        shifted = theta_pow(ctx.base, omega, previous)
        tail = birkhoff_average(ctx, shifted, source, obs, checkpoint - previous)
        xi = 1.0 - previous / checkpoint
        if j % 2 == 1:
            deviation, bound, rho_term = abs(value), rho + slack, 0.0
        else:
            rho_term = abs(tail - target)
            deviation, bound = abs(value - target), rho + rho_term + slack
        row = OscillationRow(
            j=j,
            parity="odd" if j % 2 == 1 else "even",
            length=length,
            checkpoint=checkpoint,
            average=value,
            deviation=deviation,
            bound=bound,
            rho_term=rho_term,
            xi=xi,
            tail_average=tail,
            split_deviation=abs(value - xi * tail),
            split_bound=2.0 * rho / 3.0 + slack,
        )
        rows.append(row)
        logger.debug("block %d: B=%.6f deviation=%.3e bound=%.3e", j, value, deviation, bound)
    return OscillationReport(series, rows, target, schedule.to_dict())


def past_orbit_points(ctx, omega, stream, count, start=0):
    """``X_{sigma^l s}(omega)`` for ``start <= l < start + count``.

    These are the points ``f^(l)_{theta^-l omega}(X_s(theta^-l omega))``
    of the past orbit reaching ``omega``.
    """
    out = []
    for head in range(start, start + count, PAST_BATCH_SIZE):
        size = min(PAST_BATCH_SIZE, start + count - head)
        shifts = np.arange(head, head + size, dtype=np.int64)
        words = stream.at(shifts[:, None] + np.arange(ctx.depth, dtype=np.int64)[None, :])
        lifts = decode_lifts(
            ctx.fam, ctx.solver, ctx.base, np.full(size, omega), words, ctx.p_depth
        )
        out.append(project(np.atleast_1d(lifts)))
    return np.concatenate(out) if out else np.zeros(0)


@dataclass
class DensityReport:
    """Coverage of a uniform circle histogram by the past orbit."""

    bins: int
    count: int
    hits: list
    first_cover: int = None

    @property
    def covered(self):
        """True when every bin was hit."""
        return self.first_cover is not None

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "bins": self.bins,
            "count": self.count,
            "first_cover": self.first_cover,
            "covered": self.covered,
            "hits": list(self.hits),
        }


def coverage(points, bins=100):
    """Histogram of ``points`` and the first prefix length hitting every bin."""
    idx = np.minimum((np.asarray(points) * bins).astype(np.int64), bins - 1)
    hits = np.bincount(idx, minlength=bins)
    first_cover = None
    if np.all(hits > 0):
        _, first = np.unique(idx, return_index=True)
        first_cover = int(first.max()) + 1
    return DensityReport(bins, int(idx.size), hits.tolist(), first_cover)


@dataclass
class ShadowingReport:
    """Distances between spliced and ``s''`` past-orbit points in one block."""

    j: int
    c_omega: float
    distances: list = field(default_factory=list)
    bounds: list = field(default_factory=list)

    @property
    def passed(self):
        """True when every distance is within its bound."""
        return all(d <= b for d, b in zip(self.distances, self.bounds))

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "j": self.j,
            "c_omega": self.c_omega,
            "checked": len(self.distances),
            "max_distance": max(self.distances, default=0.0),
            "passed": self.passed,
        }


def shadowing_report(ctx, omega, schedule, bar_s, j, c_omega, count=None, slack=1e-9):
    """Compare ``X_{sigma^{N_{j-1}+l} s_bar}(omega)`` with ``X_{sigma^l s''}(omega)``.

    The two codes agree on their first ``N_j - N_{j-1} - l`` symbols, so the
    points lie within ``C_omega lambda^-(N_j - N_{j-1} - l)`` of each other.
    """
    if j % 2 != 0 or not 2 <= j <= schedule.blocks:
        raise ValueError("shadowing is checked on even blocks of the schedule")
    previous, length = schedule.boundaries[j - 1], schedule.boundaries[j]
    span = length - previous
    count = span if count is None else min(count, span)
    spliced = past_orbit_points(ctx, omega, bar_s, count, start=previous)
    plain = past_orbit_points(ctx, omega, bar_s.second, count)
    d = circle_distance(spliced, plain)
    ell = np.arange(count)
    decay = np.exp(-(span - ell) * math.log(ctx.fam.lam))
    bounds = c_omega * decay + 2 * ctx.error_per_point + slack
    return ShadowingReport(j, c_omega, d.tolist(), bounds.tolist())


@dataclass
class WitnessResult:
    """Indices found for one witness point."""

    shift: int
    below_index: int = None
    below_value: float = None
    above_index: int = None
    above_value: float = None

    @property
    def found(self):
        """True when both indices exist."""
        return self.below_index is not None and self.above_index is not None

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "shift": self.shift,
            "below_index": self.below_index,
            "below_value": self.below_value,
            "above_index": self.above_index,
            "above_value": self.above_value,
            "found": self.found,
        }


@dataclass
class WitnessReport:
    """Finite witnesses of averages dipping below ``alpha`` and above ``beta``."""

    alpha: float
    beta: float
    n_min: int
    n_max: int
    results: list

    @property
    def passed(self):
        """True when every witness has both indices."""
        return all(r.found for r in self.results)

    @property
    def failures(self):
        """Shifts of the witnesses missing an index."""
        return [r.shift for r in self.results if not r.found]

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "passed": self.passed,
            "failures": self.failures,
            "results": [r.to_dict() for r in self.results],
        }


def _search_witness(ctx, omega, stream, obs, alpha, beta, n_min, n_max, shift):
    result = WitnessResult(shift)
    total = 0.0
    for head in range(0, n_max, ctx.batch_size):
        size = min(ctx.batch_size, n_max - head)
        values = obs(ctx.points(omega, stream, head, size))
        averages = (total + np.cumsum(values)) / np.arange(head + 1, head + size + 1)
        total += float(np.sum(values))
        valid = np.arange(head + 1, head + size + 1) >= n_min
        if result.below_index is None:
            hit = np.flatnonzero(valid & (averages < alpha))
            if hit.size:
                result.below_index = int(head + hit[0] + 1)
                result.below_value = float(averages[hit[0]])
        if result.above_index is None:
            hit = np.flatnonzero(valid & (averages > beta))
            if hit.size:
                result.above_index = int(head + hit[0] + 1)
                result.above_value = float(averages[hit[0]])
        if result.found:
            break
    return result


def residual_witness(ctx, omega, stream, obs, shifts, alpha, beta, n_max, n_min=1,
                     target=None):
    """Search ``n`` in ``[n_min, n_max]`` with ``B_n < alpha`` and ``B_n > beta``.

    The witness with shift ``l`` is the past-orbit point
    ``X_{sigma^l s}(omega)``; its forward orbit is coded by ``sigma^l s``.
    A missing index is reported, not raised.

    :param target: the integral ``I*``; when given, ``0 < alpha < beta < I*``
        is required.
    """
    if not alpha < beta:
        raise ValueError("alpha must be smaller than beta")
    if target is not None and not 0 < alpha < beta < target:
        raise ValueError(f"need 0 < alpha < beta < I* = {target!r}")
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    results = [
        _search_witness(ctx, omega, stream.shift(int(i)), obs, alpha, beta, n_min, n_max, int(i))
        for i in shifts
    ]
    return WitnessReport(alpha, beta, n_min, n_max, results)
