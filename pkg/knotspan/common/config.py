#####################################################################
# config.py
#
# (c) Copyright 2026, knotspan developers. All rights reserved.
#
# This library is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License as published by the Free Software Foundation; either
# version 2.1 of the License, or (at your option) any later version.
#
# This software is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#####################################################################
"""Default settings for computations and verification runs."""

# 2**24 states
DEFAULT_STATE_CAP = 24

# 2**16 dealternator smoothings
DEFAULT_SMOOTHING_CAP = 16

DEFAULT_WORKERS = 1

DEFAULT_VERIFY_MAX_CROSSINGS = 10

SWITCH_FAMILY_MAX_CROSSINGS = 8

EXHAUSTIVE_STATE_MAX_CROSSINGS = 8

K11N151_ENVIRONMENT_VARIABLE = "KNOTSPAN_K11N151_PD"
K11N151_FILE_NAME = "k11n151.pd"

# skein relation checked at every crossing up to this size
DEFAULT_SKEIN_MAX_CROSSINGS = 12
