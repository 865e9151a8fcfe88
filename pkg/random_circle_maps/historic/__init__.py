# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Birkhoff averages and orbits with historic behaviour."""

from .birkhoff import (
    BirkhoffSeries,
    DensityReport,
    OrbitContext,
    OscillationReport,
    OscillationRow,
    ShadowingReport,
    TargetIntegral,
    WitnessReport,
    WitnessResult,
    birkhoff_average,
    birkhoff_series,
    coverage,
    oscillation_report,
    past_orbit_points,
    residual_witness,
    segment_sum,
    shadowing_report,
    split_average,
    target_integral,
)
from .observables import BumpObservable, bump_eval
from .schedule import (
    RHO_RULES,
    BlockCertificate,
    BlockSchedule,
    Inequality,
    block_length,
    build_bar_s,
    build_schedule,
    certify_block,
    rho_tilde,
)

__all__ = (
    "BirkhoffSeries",
    "BlockCertificate",
    "BlockSchedule",
    "BumpObservable",
    "DensityReport",
    "Inequality",
    "OrbitContext",
    "OscillationReport",
    "OscillationRow",
    "RHO_RULES",
    "ShadowingReport",
    "TargetIntegral",
    "WitnessReport",
    "WitnessResult",
    "birkhoff_average",
    "birkhoff_series",
    "block_length",
    "build_bar_s",
    "build_schedule",
    "bump_eval",
    "certify_block",
    "coverage",
    "oscillation_report",
    "past_orbit_points",
    "residual_witness",
    "rho_tilde",
    "segment_sum",
    "shadowing_report",
    "split_average",
    "target_integral",
)
