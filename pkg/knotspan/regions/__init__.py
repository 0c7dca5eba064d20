#####################################################################
# __init__.py
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
"""Region decomposition, circle number identities and Turaev genus."""

from .decomposition import Bridge, RegionComponent, RegionDecomposition, circle_number_via_regions, \
    is_dealternator_connected_via_regions, region_decomposition, s_a_color
from .theorems import AlternatingCaseCheck, RegionCheck, SurfaceData, surface_data, theorem_ac_check, \
    theorem_rk_check, turaev_genus

__all__ = ["Bridge", "RegionComponent", "RegionDecomposition", "circle_number_via_regions",
           "is_dealternator_connected_via_regions", "region_decomposition", "s_a_color",
           "AlternatingCaseCheck", "RegionCheck", "SurfaceData", "surface_data", "theorem_ac_check",
           "theorem_rk_check", "turaev_genus"]
