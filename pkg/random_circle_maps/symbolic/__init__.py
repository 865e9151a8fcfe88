# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Symbolic coding of random orbits."""

from .partition import (
    MarkovPartitionView,
    cylinder,
    cylinder_lifts,
    decode_lifts,
    decode_orbit,
    decode_point,
    encode_point,
    equivariance_check,
    gap_interval,
    level_one_boundaries,
    partition,
    verify_gap,
)
from .streams import (
    BlockCompositeStream,
    DigitsStream,
    PeriodicStream,
    SeededDigitsStream,
    ShiftedStream,
    SymbolStream,
    SymbolWord,
    stream_from_dict,
)

__all__ = (
    "BlockCompositeStream",
    "DigitsStream",
    "MarkovPartitionView",
    "PeriodicStream",
    "SeededDigitsStream",
    "ShiftedStream",
    "SymbolStream",
    "SymbolWord",
    "cylinder",
    "cylinder_lifts",
    "decode_lifts",
    "decode_orbit",
    "decode_point",
    "encode_point",
    "equivariance_check",
    "gap_interval",
    "level_one_boundaries",
    "partition",
    "stream_from_dict",
    "verify_gap",
)
