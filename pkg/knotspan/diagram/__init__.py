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
"""PD coded diagrams, their faces and elementary operations."""

from .diagram import Color, Diagram, Smoothing
from .faces import CheckerboardColoring, FaceDecomposition, checkerboard, crossing_graph, faces, is_connected, \
    is_reduced, nugatory_crossings
from .operations import mirror, smooth_crossing, smooth_crossings, switch_crossings
from .pd import load_pd, parse_pd, to_pd

__all__ = ["Color", "Diagram", "Smoothing",
           "CheckerboardColoring", "FaceDecomposition", "checkerboard", "crossing_graph", "faces", "is_connected",
           "is_reduced", "nugatory_crossings",
           "mirror", "smooth_crossing", "smooth_crossings", "switch_crossings",
           "load_pd", "parse_pd", "to_pd"]
