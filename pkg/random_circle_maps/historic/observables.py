# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""C1 bump observables."""

from dataclasses import dataclass

import numpy as np

from ..circle import project
from ..symbolic import gap_interval


def _smoothstep(u):
    return u * u * (3.0 - 2.0 * u)


@dataclass(frozen=True)
class BumpObservable:
    """Bump equal to 1 on ``J``, supported in ``J'``, cubic ramps in between.

    Both arcs share their midpoint, so the two ramps have the same width.
    """

    inner: object
    outer: object

    def __post_init__(self):
        """Check that ``J`` sits centred inside ``J'``."""
        if self.ramp_width <= 0:
            raise ValueError("J must be strictly inside J'")
        offset = project(self.inner.left - self.outer.left)
        if abs(offset - self.ramp_width) > 1e-12:
            raise ValueError("J must be centred in J'")

    @classmethod
    def from_gap(cls, delta0, k):
        """Bump built on :func:`~random_circle_maps.symbolic.gap_interval`."""
        inner, outer = gap_interval(delta0, k)
        return cls(inner, outer)

    @property
    def ramp_width(self):
        """Width of each ramp."""
        return 0.5 * (self.outer.length - self.inner.length)

    @property
    def c0_norm(self):
        """Sup norm."""
        return 1.0

    @property
    def c1_norm(self):
        """Sup of the derivative: ``1.5 / ramp_width``."""
        return 1.5 / self.ramp_width

    @property
    def integral(self):
        """Lebesgue integral ``|J| + ramp_width``."""
        return self.inner.length + self.ramp_width

    def __call__(self, x):
        """Evaluate at circle points (vectorized)."""
        t = np.asarray(project(np.subtract(x, self.outer.left)))
        w = self.ramp_width
        length = self.outer.length
        rising = _smoothstep(np.clip(t / w, 0.0, 1.0))
        falling = _smoothstep(np.clip((length - t) / w, 0.0, 1.0))
        value = np.where(t <= length, np.minimum(rising, falling), 0.0)
        if np.ndim(value) == 0:
            return float(value)
        return value

    def to_dict(self):
        """JSON-friendly description."""
        return {
            "J": [self.inner.left, self.inner.length],
            "J_prime": [self.outer.left, self.outer.length],
            "ramp_width": self.ramp_width,
            "c1_norm": self.c1_norm,
            "integral": self.integral,
        }


def bump_eval(obs, x):
    """``phi_0(x)``."""
    return obs(x)
