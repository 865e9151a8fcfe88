# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Block lengths and the block schedule of the historic construction.

Tolerances are kept as :class:`fractions.Fraction` so that the integer
constraints on ``N_j`` are evaluated exactly.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import BudgetExceeded
from ..symbolic import BlockCompositeStream, PeriodicStream

logger = logging.getLogger(__name__)


RHO_RULES = {
    "geometric": lambda j: Fraction(1, 2**j),
    "harmonic": lambda j: Fraction(1, j),
}
"""Named tolerance sequences ``j -> rho~_j`` (``j >= 1``)."""


def rho_tilde(rule, j):
    """Tolerance of block ``j`` under a named rule."""
    try:
        return RHO_RULES[rule](j)
    except KeyError:
        raise ValueError(f"unknown rho rule {rule!r}; choose from {sorted(RHO_RULES)}")


def _decay_term(n, m, c1_norm, lam):
    half = n // 2
    if c1_norm == 0 or half <= m:
        return 0.0
    return math.exp(math.log((half - m) * c1_norm) - 0.5 * n * math.log(lam))


def block_length(m, rho, obs, lam):
    """Smallest ``n >= 2m + 2`` that certifies the block estimate.

    The returned ``n`` satisfies ``2 m c0 / floor(n/2) <= rho/2`` and
    ``(floor(n/2) - m) lambda^(-n/2) c1 <= rho/2``, so that two orbits
    whose codes agree on ``[m, n-1]`` have averages at time
    ``floor(n/2)`` within ``rho`` of each other, whatever ``omega``.

    :param obs: anything with ``c0_norm`` and ``c1_norm``.
    """
    if not 0 < rho <= 1:
        raise ValueError("rho must lie in (0, 1]")
    if m < 0:
        raise ValueError("m must be non-negative")
    rho = Fraction(rho)
    c0 = Fraction(obs.c0_norm)
    # floor(n/2) >= 4 m c0 / rho
    half = max(m + 1, math.ceil(4 * m * c0 / rho))
    n = max(2 * m + 2, 2 * half)
    while _decay_term(n, m, obs.c1_norm, lam) > rho / 2:
        n += 1
    return n


@dataclass(frozen=True)
class Inequality:
    """One verified inequality ``value <= bound`` (or ``>=``)."""

    name: str
    value: float
    bound: float
    relation: str = "<="

    @property
    def passed(self):
        """Outcome."""
        if self.relation == ">=":
            return self.value >= self.bound
        return self.value <= self.bound

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "name": self.name,
            "value": self.value,
            "bound": self.bound,
            "relation": self.relation,
            "passed": self.passed,
        }


@dataclass
class BlockCertificate:
    """The inequalities block ``j`` of a schedule was checked against."""

    j: int
    previous: int
    length: int
    rho_tilde: float
    checks: list = field(default_factory=list)

    @property
    def checkpoint(self):
        """``floor(N_j / 2)``."""
        return self.length // 2

    @property
    def passed(self):
        """True when every inequality holds."""
        return all(c.passed for c in self.checks)

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "j": self.j,
            "N_previous": self.previous,
            "N": self.length,
            "checkpoint": self.checkpoint,
            "rho_tilde": self.rho_tilde,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def certify_block(j, previous, length, rho, obs, lam):
    """Check every inequality the schedule construction needs for block ``j``."""
    rho = Fraction(rho)
    m, n = previous, length
    half = n // 2
    third = rho / 3
    checks = [
        Inequality("growth", n, float(6 * m / rho + 2), ">="),
        Inequality("xi", float(Fraction(m, half)), float(third)),
        Inequality("truncation", float(Fraction(2 * m) * Fraction(obs.c0_norm) / half),
                   float(third / 2)),
        Inequality("decay", _decay_term(n, m, obs.c1_norm, lam), float(third / 2)),
        Inequality("doubling", half - m, m, ">="),
    ]
    return BlockCertificate(j, m, n, float(rho), checks)


@dataclass
class BlockSchedule:
    """Boundaries ``N_0 = 0 < N_1 < ...`` with their tolerances and certificates."""

    boundaries: tuple
    rho: tuple
    certificates: list
    lam: float
    rule: str = "geometric"

    @property
    def blocks(self):
        """Number of blocks."""
        return len(self.boundaries) - 1

    @property
    def checkpoints(self):
        """``floor(N_j / 2)`` for every block."""
        return [n // 2 for n in self.boundaries[1:]]

    @property
    def horizon(self):
        """Last checkpoint."""
        return self.checkpoints[-1] if self.blocks else 0

    @property
    def passed(self):
        """True when every block certificate holds."""
        return all(c.passed for c in self.certificates)

    def to_dict(self):
        """JSON-friendly representation."""
        return {
            "rule": self.rule,
            "lambda": self.lam,
            "N": list(self.boundaries),
            "rho_tilde": list(self.rho),
            "checkpoints": self.checkpoints,
            "certificates": [c.to_dict() for c in self.certificates],
        }


def build_schedule(obs, lam, blocks, rule="geometric", budget=10**7):
    """Grow ``N_1, N_2, ...`` until ``blocks`` blocks are certified.

    ``N_j`` is the largest of the block length at tolerance ``rho~_j / 3``,
    ``ceil(6 N_{j-1} / rho~_j) + 2`` and the least ``n`` with
    ``N_{j-1} / floor(n/2) <= rho~_j / 3``.

    :raises BudgetExceeded: when a checkpoint passes ``budget``; the
        schedule of the blocks that fit is attached as ``feasible``.
    """
    if blocks < 1:
        raise ValueError("at least one block is needed")
    boundaries = [0]
    rhos = []
    certificates = []
    for j in range(1, blocks + 1):
        rho = rho_tilde(rule, j)
        m = boundaries[-1]
        length = max(
            block_length(m, rho / 3, obs, lam),
            math.ceil(6 * m / rho) + 2,
            2 * math.ceil(3 * m / rho),
        )
        if length // 2 > budget:
            feasible = BlockSchedule(tuple(boundaries), tuple(rhos), certificates, lam, rule)
            logger.debug("block %d needs checkpoint %d > %d", j, length // 2, budget)
            raise BudgetExceeded(
                f"schedule block {j}", length // 2, budget, feasible=feasible
            )
        boundaries.append(length)
        rhos.append(float(rho))
        certificates.append(certify_block(j, m, length, rho, obs, lam))
        logger.debug("block %d: N=%d rho=%s", j, length, rho)
    return BlockSchedule(tuple(boundaries), tuple(rhos), certificates, lam, rule)


def build_bar_s(schedule, second, first=None):
    """The spliced stream: ``first`` on odd blocks, ``second`` on even ones.

    ``first`` defaults to the all-zeros stream.
    """
    if first is None:
        first = PeriodicStream((0,), second.k)
    return BlockCompositeStream(schedule.boundaries, first, second)
