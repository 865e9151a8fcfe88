# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random conjugacy to the k-folding map.

Everything here is built from the inverse branches
``F_l(omega)(z) = F(omega)(z + l)`` of the lifts. They contract by
``1/lambda``, so composing them backwards in time (a *pullback*) is the
numerically stable way to evaluate the random fixed point ``p``, the grids
``a_j^n(omega)`` and the piecewise-linear approximations ``h_n(omega)``.
"""

import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .circle import project
from .errors import BudgetExceeded, SolverBudgetExceeded
from .system import theta_pow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InverseBranchSolver:
    """Bracketed bisection followed by a guarded Newton polish.

    :param tolerance: absolute bisection tolerance in lift units.
    :param max_bisections: bisection budget.
    :param newton_steps: polish steps; a step leaving the final bracket is
        discarded.
    """

    tolerance: float = 1e-12
    max_bisections: int = 200
    newton_steps: int = 5

    def solve(self, fam, omega, z, ell=0):
        """Return ``y`` with ``lift(omega, y) = z + ell`` (vectorized)."""
        target = np.add(z, ell, dtype=np.float64)
        k = fam.k
        pad = 1e-15 * (1.0 + np.abs(target))
        spread = fam.maps.deviation_bound
        lo = (target - spread) / k - pad
        hi = (target + spread) / k + pad
        if np.any(fam.lift(omega, lo) > target) or np.any(fam.lift(omega, hi) < target):
            raise SolverBudgetExceeded("root not bracketed by the degree-k bounds")

        for iteration in range(self.max_bisections + 1):
            if np.max(hi - lo) <= self.tolerance:
                break
            if iteration == self.max_bisections:
                raise SolverBudgetExceeded("tolerance not reached", iteration)
            mid = 0.5 * (lo + hi)
            below = fam.lift(omega, mid) < target
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)

        y = 0.5 * (lo + hi)
        for _ in range(self.newton_steps):
            step = (fam.lift(omega, y) - target) / fam.derivative(omega, y)
            candidate = y - step
            y = np.where((candidate >= lo) & (candidate <= hi), candidate, y)
        if np.ndim(y) == 0:
            return float(y)
        return y


def inverse_branch(fam, solver, omega, z, ell):
    """``F_ell(omega)(z)``: the preimage of ``z + ell`` under the lift."""
    if not (0 <= np.min(ell) and np.max(ell) < fam.k):
        raise ValueError(f"branch must lie in 0..{fam.k - 1}")
    return solver.solve(fam, omega, z, ell)


def pullback(fam, solver, base, omega, symbols, anchor):
    """Compose inverse branches backwards along a word.

    Computes ``F_{s_0}(omega) o F_{s_1}(theta omega) o ... o
    F_{s_{n-1}}(theta^{n-1} omega)(anchor)``. ``symbols`` has shape
    ``(n,)`` or ``(batch, n)``; ``omega`` and ``anchor`` broadcast against
    the batch.
    """
    symbols = np.asarray(symbols)
    z = np.asarray(anchor, dtype=np.float64)
    for i in range(symbols.shape[-1] - 1, -1, -1):
        z = solver.solve(fam, theta_pow(base, omega, i), z, symbols[..., i])
    if np.ndim(z) == 0:
        return float(z)
    return z


def default_depth(fam, tolerance=1e-10):
    """Pullback depth after which the random fixed point is within ``tolerance``."""
    return max(1, math.ceil(math.log(fam.b_length / tolerance) / math.log(fam.lam)))


@dataclass(frozen=True)
class GraphTransform:
    """The operator ``G(phi)(omega) = F(omega)(phi(theta omega))`` on sections."""

    fam: object
    solver: InverseBranchSolver
    base: object
    depth: int = 60
    anchor: float = None

    def __call__(self, section):
        """Image of a section (a callable ``omega -> lift``)."""

        def image(omega):
            return self.solver.solve(self.fam, omega, section(self.base.theta(omega)))

        return image

    def iterate(self, omega):
        """``G^depth`` applied to the constant section at the anchor."""
        anchor = self.fam.anchor if self.anchor is None else self.anchor
        return pullback(
            self.fam, self.solver, self.base, omega, np.zeros(self.depth, dtype=int), anchor
        )


@lru_cache(maxsize=65536)
def _cached_fixed_point(fam, solver, base, omega, depth):
    return GraphTransform(fam, solver, base, depth).iterate(omega)


def random_fixed_point(fam, solver, base, omega, depth=None):
    """``p_N(omega)``, within ``lambda^-N |B|`` of the random fixed point.

    Scalar calls are memoized on ``(family, solver, base, omega, depth)``;
    array calls are computed in one vectorized pullback.
    """
    depth = default_depth(fam) if depth is None else depth
    if depth < 1:
        raise ValueError("depth must be positive")
    if np.ndim(omega) == 0:
        return _cached_fixed_point(fam, solver, base, float(omega), depth)
    return GraphTransform(fam, solver, base, depth).iterate(np.asarray(omega))


def family_hash(fam):
    """Short content hash identifying a validated family."""
    payload = json.dumps(fam.parameters(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@dataclass(eq=False)
class ConjugacyGrid:
    """Points ``a_0^n(omega) < ... < a_{k^n}^n(omega)`` (lift values)."""

    omega: float
    level: int
    k: int
    points: np.ndarray
    p_depth: int
    family_key: str = ""
    metadata: dict = field(default_factory=dict)

    @property
    def size(self):
        """Number of cells ``k^n``."""
        return self.k**self.level

    @property
    def gaps(self):
        """Cell lengths."""
        return np.diff(self.points)

    @property
    def lipschitz(self):
        """Largest slope of ``h_n(omega)``."""
        return float(self.size * np.max(self.gaps))

    def evaluate_lift(self, x):
        """Piecewise-linear lift ``h~_n(omega)`` on representatives in ``[0, 1)``."""
        kn = self.size
        t = np.asarray(project(x)) * kn
        j = np.minimum(np.floor(t).astype(np.int64), kn - 1)
        frac = t - j
        return self.points[j] + frac * (self.points[j + 1] - self.points[j])

    def node(self, j):
        """Grid point ``a_j`` projected to the circle."""
        return project(self.points[j])


def conjugacy_grid(fam, solver, base, omega, level, p_depth=None, max_points=2**20):
    """Level-``n`` grid of ``h_n(omega)``.

    Built level by level from ``p(theta^n omega)``: the grid at
    ``theta^{n-m} omega`` is the image of the one at ``theta^{n-m+1} omega``
    under all ``k`` inverse branches, one solve per node.

    :raises BudgetExceeded: when ``k^n`` exceeds ``max_points``.
    """
    if level < 0:
        raise ValueError("level must be non-negative")
    k = fam.k
    if k**level > max_points:
        raise BudgetExceeded("conjugacy grid", k**level, max_points)
    p_depth = default_depth(fam) if p_depth is None else p_depth
    omega = project(omega)
    nodes = np.array(
        [random_fixed_point(fam, solver, base, theta_pow(base, omega, level), p_depth)]
    )
    branches = np.arange(k, dtype=np.float64)
    for m in range(1, level + 1):
        targets = (nodes[None, :] + branches[:, None]).ravel()
        nodes = solver.solve(fam, theta_pow(base, omega, level - m), targets)
        nodes = np.atleast_1d(nodes)
    points = np.append(nodes, nodes[0] + 1.0)
    logger.debug("grid omega=%.6f level=%d built, %d nodes", omega, level, points.size)
    return ConjugacyGrid(
        omega=omega,
        level=level,
        k=k,
        points=points,
        p_depth=p_depth,
        family_key=family_hash(fam),
    )


def h_eval(grid, x):
    """``h_n(omega)(x)``, the projected piecewise-linear interpolation."""
    return project(grid.evaluate_lift(x))


def grid_distance(grid_a, grid_b):
    """``max_j |a_j^n(omega) - a_j^n(omega')|``, bounding ``d_C0(h_n, h_n')``."""
    if grid_a.points.shape != grid_b.points.shape:
        raise ValueError("grids must share level and degree")
    return float(np.max(np.abs(grid_a.points - grid_b.points)))


def noise_stability(grids):
    """Largest :func:`grid_distance` over all pairs of same-level grids."""
    grids = list(grids)
    if len(grids) < 2:
        return 0.0
    stacked = np.stack([g.points for g in grids])
    return float(np.max(stacked.max(axis=0) - stacked.min(axis=0)))


def residual_bound(fam, level):
    """``2 (1 + Lip f) lambda^-n``."""
    return 2.0 * (1.0 + fam.lipschitz) * fam.lam ** (-level)


def conjugacy_residual(fam, solver, base, omega, level, samples=4096,
                       grid_source=None, seed=0):
    """Sampled ``sup_x d(h_n(theta w)(E_k x), f(w)(h_n(w)(x)))``.

    Sample points are seeded uniform draws. They miss the grid nodes,
    where ``h_n`` is exact.

    :param grid_source: callable ``omega -> ConjugacyGrid``; defaults to
        :func:`conjugacy_grid` at ``level``.
    :param seed: seed of the sample points.
    """
    if grid_source is None:

        def grid_source(w):
            return conjugacy_grid(fam, solver, base, w, level)

    here = grid_source(project(omega))
    there = grid_source(base.theta(omega))
    xs = np.random.default_rng(seed).random(samples)
    lhs = h_eval(there, project(fam.k * xs))
    rhs = project(fam.lift(omega, here.evaluate_lift(xs)))
    d = np.abs(lhs - rhs)
    return float(np.max(np.minimum(d, 1.0 - d)))
