# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Circle arithmetic.

Points of the circle are plain floats (or numpy arrays of floats) in
``[0, 1)``; lifts are unrestricted reals. :func:`project` is the canonical
projection and is applied after every arithmetic step.

>>> project(1.25)
0.25
>>> round(circle_distance(0.1, 0.9), 12)
0.2
"""

import enum
from dataclasses import dataclass

import numpy as np


def project(x):
    """Project a lift (scalar or array) to ``[0, 1)``."""
    y = np.subtract(x, np.floor(x))
    # x slightly below an integer can round up to exactly 1.0
    y = np.where(y >= 1.0, 0.0, y)
    if np.ndim(y) == 0:
        return float(y)
    return y


def lift(p):
    """Return the representative of a circle point in ``[0, 1)``."""
    return project(p)


def circle_distance(p, q):
    """Arc-length distance ``min(|p - q|, 1 - |p - q|)`` on the circle."""
    d = np.abs(project(np.subtract(p, q)))
    d = np.minimum(d, 1.0 - d)
    if np.ndim(d) == 0:
        return float(d)
    return d


class IntervalKind(enum.Enum):
    """Members of the interval family."""

    ARC = "arc"
    SINGLETON = "singleton"
    FULL = "full"


@dataclass(frozen=True)
class CircleInterval:
    """Left-closed right-open arc ``[left, left + length)``, a point, or the circle."""

    kind: IntervalKind
    left: float = 0.0
    length: float = 0.0

    def __post_init__(self):
        """Check the invariants of the kind."""
        if self.kind is IntervalKind.ARC and not 0.0 < self.length < 1.0:
            raise ValueError(f"arc length must lie in (0, 1), got {self.length}")
        object.__setattr__(self, "left", project(self.left))
        if self.kind is IntervalKind.SINGLETON:
            object.__setattr__(self, "length", 0.0)
        elif self.kind is IntervalKind.FULL:
            object.__setattr__(self, "left", 0.0)
            object.__setattr__(self, "length", 1.0)

    @classmethod
    def arc(cls, left, length):
        """Arc starting at ``left``; a length of one or more gives the circle."""
        if length >= 1.0:
            return cls.full()
        if length <= 0.0:
            return cls.singleton(left)
        return cls(IntervalKind.ARC, left, length)

    @classmethod
    def between(cls, left_lift, right_lift):
        """Arc spanned by two lifts ``left_lift <= right_lift``."""
        return cls.arc(left_lift, right_lift - left_lift)

    @classmethod
    def singleton(cls, point):
        """One-point set."""
        return cls(IntervalKind.SINGLETON, point)

    @classmethod
    def full(cls):
        """The whole circle."""
        return cls(IntervalKind.FULL)

    @property
    def right(self):
        """Right endpoint (excluded for arcs)."""
        return project(self.left + self.length)

    @property
    def midpoint(self):
        """Midpoint of the arc."""
        return project(self.left + self.length / 2)

    def contains(self, x):
        """Membership with the left-closed right-open convention."""
        return interval_membership(x, self)

    def shrink(self, fraction):
        """Remove ``fraction`` of the length from each side."""
        if self.kind is not IntervalKind.ARC:
            raise ValueError("only arcs can be shrunk")
        cut = self.length * fraction
        return CircleInterval.arc(self.left + cut, self.length - 2 * cut)

    def sample(self, count):
        """Evenly spread points of the closed arc, endpoints included."""
        if self.kind is IntervalKind.SINGLETON:
            return np.full(count, self.left)
        return project(self.left + self.length * np.linspace(0.0, 1.0, count))


def interval_membership(x, interval):
    """True iff ``x`` lies in ``interval``, handling arcs through zero."""
    x = project(x)
    if interval.kind is IntervalKind.FULL:
        result = np.ones(np.shape(x), dtype=bool)
    elif interval.kind is IntervalKind.SINGLETON:
        result = np.asarray(circle_distance(x, interval.left)) == 0.0
    else:
        result = np.asarray(project(np.subtract(x, interval.left))) < interval.length
    if np.ndim(result) == 0:
        return bool(result)
    return result


def _distance_to_closed(x, interval):
    """Distance from points to the closure of an interval."""
    if interval.kind is IntervalKind.FULL:
        return np.zeros(np.shape(x))
    offset = project(np.subtract(x, interval.left))
    inside = offset <= interval.length
    to_ends = np.minimum(
        circle_distance(x, interval.left), circle_distance(x, interval.right)
    )
    return np.where(inside, 0.0, to_ends)


def _one_sided(a, b):
    """``sup_{x in A} d(x, B)`` for closed members of the family."""
    if b.kind is IntervalKind.FULL:
        return 0.0
    gap = 1.0 - b.length
    if a.kind is IntervalKind.FULL:
        return gap / 2
    # d(., B) is a tent on the complement of B peaking at its midpoint, so
    # the supremum over an arc is reached at an endpoint or at that peak
    candidates = [a.left, a.right]
    peak = project(b.left + b.length + gap / 2)
    if a.kind is IntervalKind.ARC and project(peak - a.left) <= a.length:
        candidates.append(peak)
    return float(np.max(_distance_to_closed(np.array(candidates), b)))


def hausdorff_distance(a, b):
    """Hausdorff distance induced by :func:`circle_distance`.

    Intervals are compared through their closures, so an arc and its closure
    are at distance zero.
    """
    return max(_one_sided(a, b), _one_sided(b, a))


def sampled_hausdorff_distance(a, b, samples=4001):
    """Brute-force Hausdorff distance over dense samples of both sets."""
    xa = a.sample(samples) if a.kind is not IntervalKind.FULL else np.arange(
        samples
    ) / samples
    xb = b.sample(samples) if b.kind is not IntervalKind.FULL else np.arange(
        samples
    ) / samples
    d = circle_distance(xa[:, None], xb[None, :])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))
