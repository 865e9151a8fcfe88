# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Noise base, perturbed map families and hypothesis validation.

The noise space is the circle with Lebesgue measure driven by the irrational
rotation ``omega -> omega + alpha``. Fibre maps are given through their
degree-``k`` lifts; a :class:`MapFamily` knows how to evaluate a lift and
bound its derivatives, and :func:`validate_hypotheses` turns one into a
:class:`RandomMapFamily` carrying the certified constants every
construction downstream relies on.
"""

import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace

import numpy as np

from .circle import project
from .errors import InvalidFamily

logger = logging.getLogger(__name__)

GOLDEN_MEAN_ANGLE = (math.sqrt(5.0) - 1.0) / 2.0
"""Default rotation angle of the noise base."""

TWO_PI = 2.0 * math.pi


def _rotation_phase(alpha, n):
    """Fractional part of ``n * alpha`` without losing the low bits of alpha.

    ``alpha`` is split into a 26-bit head, whose products with integers below
    ``2**27`` are exact, and a small tail.
    """
    head = math.ldexp(math.floor(math.ldexp(alpha, 26)), -26)
    tail = alpha - head
    n = np.asarray(n, dtype=np.float64)
    a = n * head
    a = a - np.floor(a)
    b = n * tail
    b = b - np.floor(b)
    return a + b


@dataclass(frozen=True)
class BaseDynamics:
    """Irrational rotation ``theta`` of the noise circle."""

    alpha: float = GOLDEN_MEAN_ANGLE
    omega0: float = 0.0

    def __post_init__(self):
        """Validate the rotation angle."""
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        object.__setattr__(self, "omega0", project(self.omega0))

    def theta(self, omega):
        """One step of the base."""
        return theta_pow(self, omega, 1)

    def theta_inv(self, omega):
        """Inverse step of the base."""
        return theta_pow(self, omega, -1)


def theta_pow(base, omega, n):
    """Return ``theta^n(omega)`` for any integer (or integer array) ``n``."""
    return project(np.add(omega, _rotation_phase(base.alpha, n)))


class MapFamily(ABC):
    """Perturbation family ``f_eps`` given through degree-``k`` lifts."""

    name = None

    k = 2
    epsilon = 0.0

    @abstractmethod
    def lift(self, omega, x):
        """Evaluate the lift at noise ``omega`` and lift value ``x``."""

    @abstractmethod
    def derivative(self, omega, x):
        """Partial derivative of the lift in ``x``."""

    @abstractmethod
    def unperturbed_lift(self, x):
        """Lift of the deterministic map ``f_0``."""

    @abstractmethod
    def unperturbed_derivative(self, x):
        """Derivative of the lift of ``f_0``."""

    @abstractmethod
    def with_epsilon(self, epsilon):
        """Same family at another noise level."""

    @abstractmethod
    def parameters(self):
        """Plain dict of parameters, used for hashing and reports."""

    @property
    @abstractmethod
    def deviation_bound(self):
        """Upper bound of ``|lift(omega, x) - k x|``; brackets inverse branches."""

    @property
    @abstractmethod
    def curvature_bounds(self):
        """``(L_x, L_omega)``: Lipschitz constants of the derivative."""

    @property
    @abstractmethod
    def perturbation_lipschitz(self):
        """Lipschitz constant of ``f_eps - f_0`` in ``x`` plus ``omega``."""

    @property
    @abstractmethod
    def max_derivative(self):
        """Upper bound of the derivative (Lipschitz constant of ``f_eps``)."""

    @property
    def p0(self):
        """Fixed point of ``f_0`` used as anchor (lift value)."""
        return 0.0


@dataclass(frozen=True)
class SineFamily(MapFamily):
    """``k x + a sin(2 pi x) + eps sin(2 pi (x + omega))``."""

    k: int = 2
    a: float = 0.02
    epsilon: float = 0.01

    name = "sine"

    def __post_init__(self):
        """Validate parameters."""
        if int(self.k) != self.k or self.k < 2:
            raise ValueError(f"degree k must be an integer >= 2, got {self.k}")
        if self.a < 0 or self.epsilon < 0:
            raise ValueError("amplitudes a and epsilon must be non-negative")

    def lift(self, omega, x):
        """Evaluate the lift."""
        return (
            self.k * x
            + self.a * np.sin(TWO_PI * x)
            + self.epsilon * np.sin(TWO_PI * (x + omega))
        )

    def derivative(self, omega, x):
        """Derivative in ``x``."""
        return (
            self.k
            + TWO_PI * self.a * np.cos(TWO_PI * x)
            + TWO_PI * self.epsilon * np.cos(TWO_PI * (x + omega))
        )

    def unperturbed_lift(self, x):
        """Lift of ``f_0``."""
        return self.k * x + self.a * np.sin(TWO_PI * x)

    def unperturbed_derivative(self, x):
        """Derivative of ``f_0``."""
        return self.k + TWO_PI * self.a * np.cos(TWO_PI * x)

    def with_epsilon(self, epsilon):
        """Same family at noise level ``epsilon``."""
        return replace(self, epsilon=epsilon)

    def parameters(self):
        """Plain parameters."""
        return {"name": self.name, "k": self.k, "a": self.a, "epsilon": self.epsilon}

    @property
    def deviation_bound(self):
        """``a + eps``."""
        return self.a + self.epsilon

    @property
    def curvature_bounds(self):
        """Second derivative bounds in ``x`` and ``omega``."""
        return TWO_PI**2 * (self.a + self.epsilon), TWO_PI**2 * self.epsilon

    @property
    def perturbation_lipschitz(self):
        """``2 pi eps`` in each variable."""
        return 2 * TWO_PI * self.epsilon

    @property
    def max_derivative(self):
        """``k + 2 pi (a + eps)``."""
        return self.k + TWO_PI * (self.a + self.epsilon)


@dataclass(frozen=True)
class HypothesisCheck:
    """One verified inequality."""

    name: str
    label: str
    value: float
    bound: float
    relation: str
    passed: bool

    def describe(self):
        """One-line human readable form."""
        status = "ok" if self.passed else "FAILED"
        return (
            f"[{status}] {self.name} ({self.label}): "
            f"{self.value:.6g} {self.relation} {self.bound:.6g}"
        )


@dataclass(frozen=True)
class RandomMapFamily:
    """A validated family together with its certified constants."""

    maps: MapFamily
    delta0: float
    eta: float
    lambda0: float
    lam: float
    b_left: float
    b_right: float
    epsilon_max: float = None

    @property
    def k(self):
        """Degree."""
        return self.maps.k

    @property
    def epsilon(self):
        """Noise level."""
        return self.maps.epsilon

    @property
    def p0(self):
        """Fixed point of ``f_0`` (circle point)."""
        return project(self.maps.p0)

    @property
    def b_length(self):
        """Length of the interval ``B``."""
        return self.b_right - self.b_left

    @property
    def anchor(self):
        """Midpoint of ``B``, the starting section of pullbacks."""
        return 0.5 * (self.b_left + self.b_right)

    @property
    def lipschitz(self):
        """Lipschitz constant of the fibre maps."""
        return self.maps.max_derivative

    def lift(self, omega, x):
        """Evaluate the lift."""
        return self.maps.lift(omega, x)

    def derivative(self, omega, x):
        """Derivative of the lift in ``x``."""
        return self.maps.derivative(omega, x)

    def parameters(self):
        """Plain dict of everything that determines the family."""
        params = dict(self.maps.parameters())
        params.update(
            delta0=self.delta0, eta=self.eta, b=[self.b_left, self.b_right]
        )
        return params


@dataclass
class ValidationReport:
    """Outcome of :func:`validate_hypotheses`."""

    parameters: dict
    lambda0: float
    lam: float
    epsilon_max: float
    checks: list = field(default_factory=list)
    family: RandomMapFamily = None

    @property
    def passed(self):
        """True when every check holds."""
        return all(check.passed for check in self.checks)

    @property
    def violated(self):
        """Names (with labels) of the failed checks."""
        return [f"{c.name} ({c.label})" for c in self.checks if not c.passed]

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "parameters": self.parameters,
            "lambda0": self.lambda0,
            "lambda": self.lam,
            "epsilon_max": self.epsilon_max,
            "passed": self.passed,
            "checks": [
                {
                    "name": c.name,
                    "label": c.label,
                    "value": c.value,
                    "bound": c.bound,
                    "relation": c.relation,
                    "passed": c.passed,
                }
                for c in self.checks
            ],
        }


def _grids(omega_samples, x_samples):
    omegas = np.arange(omega_samples) / omega_samples
    xs = np.arange(x_samples) / x_samples
    return omegas, xs


def unperturbed_expansion(maps, x_samples=4096):
    """Certified lower bound of ``inf f_0'`` from a grid minimum.

    The grid minimum is lowered by the Lipschitz constant of ``f_0'`` times
    half the grid spacing.
    """
    xs = np.arange(x_samples) / x_samples
    curvature = maps.with_epsilon(0.0).curvature_bounds[0]
    return float(np.min(maps.unperturbed_derivative(xs))) - curvature * 0.5 / x_samples


def _noise_checks(maps, lam, eta, b_left, b_right, omega_samples, x_samples):
    """Checks whose outcome depends on the noise level."""
    omegas, xs = _grids(omega_samples, x_samples)
    hx, hw = 0.5 / x_samples, 0.5 / omega_samples
    lx, lw = maps.curvature_bounds
    checks = []

    deriv = maps.derivative(omegas[:, None], xs[None, :])
    inf_deriv = float(np.min(deriv)) - lx * hx - lw * hw
    checks.append(
        HypothesisCheck(
            "expansion", "expansion", inf_deriv, lam, ">=", inf_deriv >= lam
        )
    )

    diff = maps.lift(omegas[:, None], xs[None, :]) - maps.unperturbed_lift(xs)[None, :]
    sup_pert = float(np.max(np.abs(diff))) + maps.perturbation_lipschitz * max(hx, hw)
    checks.append(HypothesisCheck("C0-closeness", "closeness", sup_pert, eta, "<", sup_pert < eta))

    lw_lift = maps.perturbation_lipschitz
    left_image = float(np.max(maps.lift(omegas, b_left))) + lw_lift * hw
    right_image = float(np.min(maps.lift(omegas, b_right))) - lw_lift * hw
    checks.append(
        HypothesisCheck(
            "B inside its image (left)", "invariance", left_image, b_left, "<=",
            left_image <= b_left,
        )
    )
    checks.append(
        HypothesisCheck(
            "B inside its image (right)", "invariance", right_image, b_right, ">=",
            right_image >= b_right,
        )
    )
    return checks


def admissible_epsilon(maps, lam, eta, b_left, b_right, omega_samples=64,
                       x_samples=1024, iterations=40):
    """Largest noise level for which the noise-dependent checks hold.

    Returns ``None`` when even ``epsilon = 0`` fails.
    """

    def ok(eps):
        checks = _noise_checks(
            maps.with_epsilon(eps), lam, eta, b_left, b_right, omega_samples, x_samples
        )
        return all(c.passed for c in checks)

    if not ok(0.0):
        return None
    lo, hi = 0.0, max(maps.epsilon, 1e-3)
    while ok(hi):
        lo, hi = hi, 2 * hi
        if hi > 1.0:
            return lo
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return lo


def validate_hypotheses(maps, delta0=0.2, eta=0.06, b_interval=(-0.1, 0.1),
                        omega_samples=256, x_samples=4096, search_epsilon=True):
    """Check the standing hypotheses and certify the family constants.

    :param maps: a :class:`MapFamily`.
    :param delta0: the constant ``delta0``.
    :param eta: the constant ``eta``.
    :param b_interval: lift interval ``B`` around the fixed point of ``f_0``.
    :returns: a passing :class:`ValidationReport` whose ``family`` is ready
        for every downstream construction.
    :raises InvalidFamily: when any check fails; the report is attached.
    """
    k = maps.k
    b_left, b_right = (float(b) for b in b_interval)
    lambda0 = unperturbed_expansion(maps, x_samples)
    lam = (lambda0 + 1.0) / 2.0
    logger.debug("lambda0=%.6f lambda=%.6f for %s", lambda0, lam, maps.parameters())

    checks = []
    omegas, xs = _grids(min(omega_samples, 64), min(x_samples, 1024))
    jump = maps.lift(omegas[:, None], xs[None, :] + 1.0) - maps.lift(
        omegas[:, None], xs[None, :]
    )
    degree_error = float(np.max(np.abs(jump - k)))
    checks.append(
        HypothesisCheck("degree-k lift", "lift", degree_error, 1e-9, "<=", degree_error <= 1e-9)
    )
    checks.append(HypothesisCheck("lambda > 1", "lambda0", lam, 1.0, ">", lam > 1.0))
    delta_cap = 0.5 * (1.0 - 1.0 / k)
    checks.append(
        HypothesisCheck("delta0 bound", "constants", delta0, delta_cap, "<", 0 < delta0 < delta_cap)
    )
    eta_cap = min(0.5, (lam - 1.0) * delta0)
    checks.append(HypothesisCheck("eta bound", "constants", eta, eta_cap, "<", 0 < eta < eta_cap))
    b_length = b_right - b_left
    checks.append(
        HypothesisCheck("|B| <= delta0", "invariance", b_length, delta0, "<=", b_length <= delta0)
    )
    p0 = maps.p0
    p0_inside = b_left <= p0 <= b_right
    checks.append(
        HypothesisCheck("p0 in B", "invariance", p0, b_right, "in", p0_inside)
    )
    checks.extend(
        _noise_checks(maps, lam, eta, b_left, b_right, omega_samples, x_samples)
    )

    epsilon_max = None
    if search_epsilon and lam > 1.0:
        epsilon_max = admissible_epsilon(maps, lam, eta, b_left, b_right)

    report = ValidationReport(
        parameters=dict(maps.parameters(), delta0=delta0, eta=eta, b=[b_left, b_right]),
        lambda0=lambda0,
        lam=lam,
        epsilon_max=epsilon_max,
        checks=checks,
    )
    if not report.passed:
        logger.debug("validation failed: %s", report.violated)
        raise InvalidFamily(report.violated, report)
    report.family = RandomMapFamily(
        maps=maps,
        delta0=delta0,
        eta=eta,
        lambda0=lambda0,
        lam=lam,
        b_left=b_left,
        b_right=b_right,
        epsilon_max=epsilon_max,
    )
    return report


@dataclass(frozen=True)
class SkewState:
    """Point ``(omega, x)`` of the skew product."""

    omega: float
    x: float

    def step(self, fam, base):
        """Apply ``(omega, x) -> (theta omega, f(omega, x))``."""
        return SkewState(base.theta(self.omega), project(fam.lift(self.omega, self.x)))


def iterate_forward(fam, base, omega, x, n):
    """Return ``f^(n)_omega(x)``; ``x`` may be an array.

    Forward iteration multiplies rounding errors by the expansion rate at
    every step; use it for short horizons only.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    state = SkewState(project(omega), project(x))
    for _ in range(n):
        state = state.step(fam, base)
    return state.x
