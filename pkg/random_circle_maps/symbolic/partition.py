# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random Markov partitions, cylinders and coding.

The partition at ``omega`` is the image under ``h(omega)`` of the
partition of the circle into ``[j/k, (j+1)/k)``; its boundaries are exactly
the level-one grid points. A cylinder is the image of a k-adic interval and
its endpoints are pullbacks of ``p`` and ``p + 1`` along the word.
"""

import logging
from dataclasses import dataclass

import numpy as np

from ..circle import CircleInterval, circle_distance, project
from ..conjugacy import conjugacy_grid, default_depth, pullback, random_fixed_point
from ..errors import BoundaryAmbiguity, EmptyGap
from ..system import iterate_forward, theta_pow
from .streams import SymbolWord

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class MarkovPartitionView:
    """The ``k`` arcs ``I_j^omega = [a_j, a_{j+1})`` at one noise value."""

    omega: float
    k: int
    boundaries: np.ndarray

    @property
    def intervals(self):
        """The arcs, in symbol order."""
        return [
            CircleInterval.between(self.boundaries[j], self.boundaries[j + 1])
            for j in range(self.k)
        ]

    @property
    def max_length(self):
        """``C_omega``: length of the longest arc."""
        return float(np.max(np.diff(self.boundaries)))

    def index_of(self, x):
        """Symbol of the arc containing ``x`` (vectorized)."""
        offsets = np.asarray(project(np.subtract(x, self.boundaries[0])))
        relative = self.boundaries - self.boundaries[0]
        j = np.searchsorted(relative, offsets, side="right") - 1
        j = np.clip(j, 0, self.k - 1)
        if np.ndim(j) == 0:
            return int(j)
        return j

    def distance_to_boundary(self, x):
        """Distance from ``x`` to the nearest boundary point."""
        d = circle_distance(np.expand_dims(x, -1), self.boundaries[: self.k])
        d = np.min(d, axis=-1)
        if np.ndim(x) == 0:
            return float(d)
        return d


def partition(fam, solver, base, omega, level=1, p_depth=None):
    """Markov partition at ``omega``, read off the exact grid nodes ``j k^{n-1}``."""
    if level < 1:
        raise ValueError("level must be at least 1")
    grid = conjugacy_grid(fam, solver, base, omega, level, p_depth)
    step = fam.k ** (level - 1)
    return MarkovPartitionView(grid.omega, fam.k, grid.points[::step].copy())


def level_one_boundaries(fam, solver, base, omegas, p_depth=None):
    """Partition boundaries ``a_0^1 .. a_k^1`` for many noise values at once.

    :returns: array of shape ``(len(omegas), k + 1)``.
    """
    omegas = np.atleast_1d(np.asarray(omegas, dtype=np.float64))
    p = np.atleast_1d(
        random_fixed_point(fam, solver, base, theta_pow(base, omegas, 1), p_depth)
    )
    branches = np.arange(fam.k, dtype=np.float64)
    nodes = solver.solve(fam, omegas[:, None], p[:, None] + branches[None, :])
    return np.concatenate([nodes, nodes[:, :1] + 1.0], axis=1)


def gap_interval(delta0, k):
    """Return ``(J, J')``, a pair of arcs avoided by every first partition arc.

    The first arc stays inside ``[-delta0, 1/k + delta0]``; ``J'`` is its
    complement with 10% of its length removed at each end and ``J`` is
    ``J'`` shrunk by a further 25% on each side.

    :raises EmptyGap: when ``delta0 >= (1 - 1/k) / 2``.
    """
    free = 1.0 - 1.0 / k - 2.0 * delta0
    if delta0 <= 0 or free <= 0:
        raise EmptyGap(delta0, k)
    complement = CircleInterval.arc(1.0 / k + delta0, free)
    outer = complement.shrink(0.1)
    return outer.shrink(0.25), outer


def verify_gap(fam, solver, base, omegas, outer, p_depth=None):
    """True when the first partition arc misses ``outer`` at every ``omega``."""
    bounds = level_one_boundaries(fam, solver, base, omegas, p_depth)
    first_length = bounds[:, 1] - bounds[:, 0]
    start = np.asarray(project(outer.left - bounds[:, 0]))
    disjoint = (start >= first_length) & (start + outer.length <= 1.0)
    if not np.all(disjoint):
        logger.debug("gap violated at %d of %d samples", np.sum(~disjoint), disjoint.size)
    return bool(np.all(disjoint))


def _word_array(word):
    if isinstance(word, SymbolWord):
        return word.as_array()
    return np.asarray(word, dtype=np.int64)


def cylinder_lifts(fam, solver, base, omega, word, p_depth=None):
    """Lift endpoints ``(L, R)`` of the cylinder of ``word`` at ``omega``."""
    symbols = _word_array(word)
    n = symbols.shape[-1]
    if n < 1:
        raise ValueError("word must be non-empty")
    anchor = random_fixed_point(fam, solver, base, theta_pow(base, omega, n), p_depth)
    ends = pullback(
        fam, solver, base, omega, symbols, np.array([anchor, anchor + 1.0])
    )
    return float(ends[0]), float(ends[1])


def cylinder(fam, solver, base, omega, word, p_depth=None):
    """The arc of points whose itinerary starts with ``word``."""
    left, right = cylinder_lifts(fam, solver, base, omega, word, p_depth)
    return CircleInterval.between(left, right)


def decode_lifts(fam, solver, base, omegas, words, p_depth=None):
    """Vectorized depth-``d`` decoding.

    :param omegas: array of noise values, shape ``(batch,)``.
    :param words: integer array ``(batch, d)``; row ``b`` is read at
        ``omegas[b]``.
    :returns: lift values of the left cylinder endpoints.
    """
    words = np.asarray(words, dtype=np.int64)
    omegas = np.asarray(omegas, dtype=np.float64)
    depth = words.shape[-1]
    anchors = random_fixed_point(
        fam, solver, base, np.atleast_1d(theta_pow(base, omegas, depth)), p_depth
    )
    return pullback(fam, solver, base, omegas, words, anchors)


def decode_point(fam, solver, base, omega, stream, depth, p_depth=None):
    """``X_s(omega)`` from the first ``depth`` symbols.

    :returns: ``(point, error_bound)`` with ``error_bound = lambda^-depth``.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    word = stream.symbols(0, depth)
    anchor = random_fixed_point(fam, solver, base, theta_pow(base, omega, depth), p_depth)
    z = pullback(fam, solver, base, omega, word, anchor)
    return project(z), fam.lam ** (-depth)


def decode_orbit(fam, solver, base, omega, stream, start, count, depth,
                 chunk=1024, p_depth=None):
    """Orbit points ``X_{sigma^i s}(theta^i omega)`` for ``start <= i < start + count``.

    The range is cut into chunks. The end of each chunk is decoded at
    ``depth``, then the chunk is swept backwards with one inverse branch per
    index, all chunks in lockstep. Every point is at least as accurate as a
    depth-``depth`` decode.
    """
    if count <= 0:
        return np.zeros(0)
    chunk = max(1, min(chunk, count))
    n_chunks = -(-count // chunk)
    heads = start + chunk * np.arange(n_chunks, dtype=np.int64)
    ends = heads + chunk
    seed_words = stream.at(ends[:, None] + np.arange(depth, dtype=np.int64)[None, :])
    z = np.atleast_1d(
        decode_lifts(fam, solver, base, theta_pow(base, omega, ends), seed_words, p_depth)
    )
    out = np.empty((n_chunks, chunk))
    for i in range(chunk - 1, -1, -1):
        idx = heads + i
        z = solver.solve(fam, theta_pow(base, omega, idx), z, stream.at(idx))
        out[:, i] = z
    return project(out.ravel()[:count])


def equivariance_check(fam, solver, base, omega, stream, depth, steps, p_depth=None):
    """``max_j d(f_{theta^j w}(X_j), X_{j+1})`` with independent depth-``d`` decodes."""
    if depth < 1 or steps < 1:
        raise ValueError("depth and steps must be positive")
    idx = np.arange(steps + 1, dtype=np.int64)
    omegas = theta_pow(base, omega, idx)
    words = stream.at(idx[:, None] + np.arange(depth, dtype=np.int64)[None, :])
    lifts = decode_lifts(fam, solver, base, omegas, words, p_depth)
    images = project(fam.lift(omegas[:-1], lifts[:-1]))
    return float(np.max(circle_distance(images, project(lifts[1:]))))


def encode_point(fam, solver, base, omega, x, n, p_depth=None):
    """Itinerary word of ``x`` for ``n`` steps of the random orbit.

    :raises BoundaryAmbiguity: when an orbit point is too close to a
        partition boundary to decide its symbol.
    """
    p_depth = default_depth(fam) if p_depth is None else p_depth
    omegas = theta_pow(base, omega, np.arange(n, dtype=np.int64))
    bounds = level_one_boundaries(fam, solver, base, omegas, p_depth)
    base_tolerance = 10.0 * fam.lam ** (-p_depth)
    symbols = []
    point = project(x)
    for j in range(n):
        view = MarkovPartitionView(float(omegas[j]), fam.k, bounds[j])
        # forward iteration multiplies the rounding error by Lip f per step
        tolerance = base_tolerance + 1e-15 * fam.lipschitz**j
        distance = float(view.distance_to_boundary(point))
        if distance < tolerance:
            raise BoundaryAmbiguity(j, distance, tolerance)
        symbols.append(view.index_of(point))
        point = iterate_forward(fam, base, omegas[j], point, 1)
    return SymbolWord(tuple(symbols), fam.k)
