# -*- coding: utf-8 -*-
#
# This file is part of Random-Circle-Maps.
# Copyright (C) 2026 Random-Circle-Maps contributors.
#
# Random-Circle-Maps is free software; you can redistribute it and/or modify
# it under the terms of the MIT License; see LICENSE file for more details.

"""Random expanding circle maps: conjugacy, symbolic coding and historic orbits."""

from .ext import RandomCircleMaps

__version__ = "0.1.0"

__all__ = ["RandomCircleMaps", "__version__"]
